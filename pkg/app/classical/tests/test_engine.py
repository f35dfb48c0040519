"""
Tests for the classical standard map ensemble.
"""
import math

import numpy as np

from django.test import SimpleTestCase, tag

from analysis.fitting import fit_growth_exponent
from classical import engine
from classical.models import ClassicalEnsembleConfig, ClassicalState
from core.exceptions import ConfigurationError, DomainError
from levy.models import Levy, Periodic
from levy.schedule import (
    build_schedule,
    mean_kick_counts,
    realization_seed,
)


def ensemble_config(**params):
    """Create and return a sample classical ensemble config."""
    defaults = {
        'K': 5.8,
        'noise_mode': Periodic(),
        'horizon': 100,
        'n_particles': 10000,
        'master_seed': 5,
    }
    defaults.update(params)
    return ClassicalEnsembleConfig(**defaults)


def unwrapped_step(x, p, K):
    p = p + K * np.sin(x)
    return x + p, p


class MapStepTests(SimpleTestCase):
    """Test one period of the standard map."""

    def test_free_rotation(self):
        """Test K = 0 leaves p and rotates x by p."""
        state = engine.map_step(ClassicalState(1.0, 2.0), 0.0)

        self.assertEqual(state.p, 2.0)
        self.assertAlmostEqual(state.x, 3.0, places=14)

    def test_kick_vanishes_at_pi(self):
        """Test sin(pi) = 0 leaves p unchanged."""
        state = engine.map_step(ClassicalState(math.pi, 1.3), 5.8)

        self.assertAlmostEqual(state.p, 1.3, places=14)

    def test_quarter_turn(self):
        """Test x = pi/2, p = 0, K = 5.8."""
        state = engine.map_step(ClassicalState(math.pi / 2, 0.0), 5.8)

        self.assertAlmostEqual(state.p, 5.8, places=14)
        self.assertAlmostEqual(state.x, 1.0876, places=4)

    def test_angle_must_be_wrapped(self):
        """Test x outside [0, 2 pi) is rejected."""
        with self.assertRaises(DomainError):
            ClassicalState(7.0, 0.0)


class JacobianTests(SimpleTestCase):
    """Test area preservation and chaos."""

    def test_analytic_determinant(self):
        """Test det map_jacobian = 1."""
        jac = engine.map_jacobian(ClassicalState(0.3, 1.0), 5.8)

        self.assertAlmostEqual(np.linalg.det(jac), 1.0, places=12)

    def test_finite_difference_determinant(self):
        """Test central differences give det 1 at 100 random points."""
        rng = np.random.default_rng(0)
        h = 1e-5
        for x, p in zip(rng.uniform(0, 2 * math.pi, 100),
                        rng.uniform(-2 * math.pi, 2 * math.pi, 100)):
            dx = np.subtract(unwrapped_step(x + h, p, 5.8),
                             unwrapped_step(x - h, p, 5.8)) / (2 * h)
            dp = np.subtract(unwrapped_step(x, p + h, 5.8),
                             unwrapped_step(x, p - h, 5.8)) / (2 * h)
            det = dx[0] * dp[1] - dp[0] * dx[1]
            self.assertLess(abs(det - 1.0), 1e-8)

            analytic = engine.map_jacobian(ClassicalState(x, p), 5.8)
            np.testing.assert_allclose(
                np.column_stack((dx, dp)), analytic, atol=1e-8
            )

    def test_lyapunov_positive(self):
        """Test the largest Lyapunov exponent is positive at K = 5.8."""
        points = [(0.5, 0.0), (1.0, 10.0), (2.5, -25.0), (4.0, 40.0),
                  (6.0, -60.0)]
        estimates = [
            engine.lyapunov_estimate(ClassicalState(x, p), 5.8)
            for x, p in points
        ]

        self.assertTrue(all(e > 0 for e in estimates))
        self.assertGreater(np.median(estimates), 0.5)


class ClassicalEnsembleTests(SimpleTestCase):
    """Test the vectorized ensemble."""

    def test_config_violations(self):
        """Test invalid values are reported by field."""
        with self.assertRaises(ConfigurationError) as ctx:
            ensemble_config(n_particles=0, record_times=(5, 2))

        self.assertIn('n_particles', str(ctx.exception))
        self.assertIn('record_times', str(ctx.exception))

    def test_no_kick_conserves_energy(self):
        """Test K = 0 keeps E constant."""
        config = ensemble_config(K=0.0, n_particles=200, horizon=20)

        energy = engine.classical_ensemble(config).energy.mean_E

        np.testing.assert_array_equal(energy, energy[0])

    def test_matches_single_particle_map(self):
        """Test particle 0 follows map_step with its own schedule."""
        config = ensemble_config(
            noise_mode=Levy(0.75), n_particles=3, horizon=25,
            section_particles=1,
        )
        seeds, x, p = engine.initial_particles(config)
        schedule = build_schedule(Levy(0.75), 25, seeds[0])
        state = ClassicalState(x[0], p[0])
        for kicked in schedule.mask:
            state = engine.map_step(state, 5.8 if kicked else 0.0)

        section = engine.classical_ensemble(config).section

        self.assertEqual(seeds[0], realization_seed(5, 0))
        self.assertAlmostEqual(section.x[-1], state.x, places=9)
        self.assertAlmostEqual(section.p[-1], state.p, places=9)

    def test_deterministic(self):
        """Test identical configs give identical results."""
        config = ensemble_config(
            noise_mode=Levy(0.5), n_particles=300, horizon=40
        )

        first = engine.classical_ensemble(config)
        second = engine.classical_ensemble(config)

        np.testing.assert_array_equal(first.energy.mean_E,
                                      second.energy.mean_E)
        np.testing.assert_array_equal(first.section.x, second.section.x)

    def test_section_capped(self):
        """Test only section_particles points are kept per record time."""
        config = ensemble_config(
            n_particles=50, horizon=10, section_particles=5,
            record_times=(0, 5, 10),
        )

        section = engine.classical_ensemble(config).section

        self.assertEqual(len(section.x), 15)
        np.testing.assert_array_equal(np.unique(section.t), [0, 5, 10])
        self.assertTrue(np.all((section.x >= 0) & (section.x < 2 * np.pi)))

    @tag('slow')
    def test_periodic_diffusion(self):
        """Test chaotic diffusion gives a growth exponent near 1."""
        curve = engine.classical_ensemble(ensemble_config()).energy

        gamma = fit_growth_exponent(curve, t_min=10).params['gamma']

        self.assertLess(abs(gamma - 1.0), 0.15)

    @tag('slow')
    def test_insensitive_to_initial_width(self):
        """Test doubling sigma_p barely moves the growth exponent."""
        narrow = engine.classical_ensemble(ensemble_config(sigma_p=1.0))
        wide = engine.classical_ensemble(ensemble_config(sigma_p=2.0))

        gammas = [
            fit_growth_exponent(r.energy, t_min=10).params['gamma']
            for r in (narrow, wide)
        ]
        self.assertLess(abs(gammas[0] - gammas[1]), 0.1)

    @tag('slow')
    def test_stationary_levy_is_linear(self):
        """Test alpha = 2 kick suppression keeps linear growth."""
        config = ensemble_config(noise_mode=Levy(2.0), horizon=200)

        curve = engine.classical_ensemble(config).energy

        gamma = fit_growth_exponent(curve, t_min=10).params['gamma']
        self.assertTrue(0.85 <= gamma <= 1.1)

    @tag('slow')
    def test_growth_follows_kick_count(self):
        """Test alpha = 0.75 energy grows like the mean kick count."""
        config = ensemble_config(noise_mode=Levy(0.75), horizon=200)
        seeds, _, _ = engine.initial_particles(config)
        kicks = mean_kick_counts(config.noise_mode, 200, seeds)

        curve = engine.classical_ensemble(config).energy

        t = np.arange(10, 201)
        kick_gamma = np.polyfit(np.log(t), np.log(kicks[t]), 1)[0]
        gamma = fit_growth_exponent(curve, t_min=10).params['gamma']
        self.assertLess(abs(gamma - kick_gamma), 0.1)
