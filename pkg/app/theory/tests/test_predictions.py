"""
Tests for the closed-form predictions.
"""
import math

import numpy as np
from scipy.special import j0

from django.test import SimpleTestCase

from analysis.fitting import fit_growth_constants
from core.exceptions import AccuracyError, DomainError
from levy.distribution import mean_waiting_time
from levy.models import LevyParams
from rotor.models import EnergyCurve
from special.tests import oracle
from theory import predictions
from theory.models import TheoryParams

Q_KICKED = predictions.q_factor(5.8, 2.09)


class QFactorTests(SimpleTestCase):
    """Test the phase-averaged overlap series."""

    def test_no_kick(self):
        """Test q(0) = 1."""
        self.assertEqual(predictions.q_factor(0.0, 2.09), 1.0)

    def test_matches_bessel_j0(self):
        """Test q(x) = J0(x) at x = 1 with ten terms."""
        self.assertAlmostEqual(
            predictions.q_factor(1.0, 1.0, n_terms=10), 0.7651976866,
            places=8,
        )

    def test_acceptance_kick(self):
        """Test q at K = 5.8, hbar_s = 2.09 is J0(2.775)."""
        self.assertAlmostEqual(Q_KICKED, j0(5.8 / 2.09), places=10)
        self.assertAlmostEqual(Q_KICKED, -0.1717, places=3)

    def test_identity_on_range(self):
        """Test q(x) = J0(x) for x in [0, 5]."""
        for x in np.linspace(0.0, 5.0, 51):
            self.assertLess(abs(predictions.q_factor(x, 1.0) - j0(x)), 1e-8)

    def test_truncated_series_reports_bound(self):
        """Test too few terms for a large argument raises."""
        with self.assertRaises(AccuracyError) as ctx:
            predictions.q_factor(20.0, 1.0, n_terms=5)

        self.assertGreater(ctx.exception.error_bound, 1e-8)

    def test_invalid_arguments(self):
        """Test n_terms < 2 and hbar_s <= 0 raise."""
        with self.assertRaises(DomainError):
            predictions.q_factor(1.0, 1.0, n_terms=1)
        with self.assertRaises(DomainError):
            predictions.q_factor(1.0, 0.0)


class TheoryParamsTests(SimpleTestCase):
    """Test parameter validation and construction."""

    def test_tau_bar_required_above_one(self):
        """Test tau_bar is present iff alpha > 1."""
        with self.assertRaises(DomainError):
            TheoryParams(alpha=2.0, q=0.5)
        with self.assertRaises(DomainError):
            TheoryParams(alpha=0.5, q=0.5, tau_bar=2.0)

    def test_q_range(self):
        """Test |q| > 1 is rejected."""
        with self.assertRaises(DomainError):
            TheoryParams(alpha=0.5, q=1.5)

    def test_for_kicks(self):
        """Test q from the kick strength and tau_bar from alpha."""
        params = TheoryParams.for_kicks(2.0, 5.8, 2.09, A2=1.5)

        self.assertAlmostEqual(params.q, j0(5.8 / 2.09), places=10)
        self.assertEqual(params.tau_bar, 2.0)
        self.assertEqual(params.A2, 1.5)
        self.assertIsNone(TheoryParams.for_kicks(0.5, 5.8, 2.09).tau_bar)


class DecoherenceFactorTests(SimpleTestCase):
    """Test D(t, 0) on both branches."""

    def test_time_origin(self):
        """Test D(0) = 1 on every branch."""
        for alpha, tau_bar in ((0.5, None), (1.0, None), (2.0, 2.0)):
            params = TheoryParams(alpha=alpha, q=Q_KICKED, tau_bar=tau_bar)
            self.assertEqual(
                predictions.decoherence_factor(0.0, params).value, 1.0
            )

    def test_no_decoherence_at_full_overlap(self):
        """Test q = 1 gives D = 1 for any t and alpha."""
        for alpha, tau_bar in ((0.25, None), (0.75, None), (1.5, 3.0)):
            params = TheoryParams(alpha=alpha, q=1.0, tau_bar=tau_bar)
            for t in (1.0, 10.0, 300.0):
                self.assertEqual(
                    predictions.decoherence_factor(t, params).value, 1.0
                )

    def test_half_order_example(self):
        """Test alpha = 0.5, q = 0, t = 4 against the reference."""
        params = TheoryParams(alpha=0.5, q=0.0)

        value = predictions.decoherence_factor(4.0, params).value

        expected = math.exp(-4.0) * oracle.unit_fraction(2, 4.0 / math.pi)
        self.assertAlmostEqual(value / expected, 1.0, places=9)

    def test_limit_case_flag(self):
        """Test alpha = 1 is the flagged exponential limit."""
        params = TheoryParams(alpha=1.0, q=0.5)

        result = predictions.decoherence_factor(2.0, params)

        self.assertTrue(result.limit_case)
        self.assertAlmostEqual(result.value, math.exp(-0.75 * 2.0),
                               places=14)
        self.assertFalse(
            predictions.decoherence_factor(
                2.0, TheoryParams(alpha=0.5, q=0.5)
            ).limit_case
        )

    def test_stationary_branch(self):
        """Test alpha > 1 is exp(-(1-q**2)(1-1/tau_bar) t)."""
        params = TheoryParams(alpha=2.0, q=0.0, tau_bar=2.0)

        value = predictions.decoherence_factor(3.0, params).value

        self.assertAlmostEqual(value, math.exp(-1.5), places=14)

    def test_negative_time(self):
        """Test t < 0 is a domain error."""
        with self.assertRaises(DomainError):
            predictions.decoherence_factor(-1.0, TheoryParams(0.5, 0.0))

    def test_relaxation_form_bounded_and_decreasing(self):
        """Test D in (0, 1] and nonincreasing on [0, 500]."""
        times = np.linspace(0.0, 500.0, 501)
        cases = [
            TheoryParams(alpha=a, q=Q_KICKED, ml_sign=-1)
            for a in (0.25, 0.5, 0.75)
        ]
        cases.append(TheoryParams(alpha=2.0, q=Q_KICKED, tau_bar=2.0))
        for params in cases:
            curve = predictions.decoherence_curve(times, params)
            self.assertTrue(np.all(curve > 0), msg=str(params))
            self.assertTrue(np.all(curve <= 1.0), msg=str(params))
            self.assertTrue(np.all(np.diff(curve) <= 0), msg=str(params))

    def test_printed_form_decays_after_first_kicks(self):
        """Test the positive-argument form decreases for t >= 2."""
        times = np.linspace(2.0, 500.0, 499)
        for alpha in (0.25, 0.5, 0.75):
            params = TheoryParams(alpha=alpha, q=Q_KICKED)
            curve = predictions.decoherence_curve(times, params)
            self.assertTrue(np.all(curve > 0), msg=str(alpha))
            self.assertTrue(np.all(np.diff(curve) < 0), msg=str(alpha))

    def test_slower_than_exponential(self):
        """Test log(D_levy / D_exp) increases on [10, 200] for alpha 0.5.

        D_exp decays at rate 1 - q**2 and matches D_levy at t = 1.
        """
        params = TheoryParams(alpha=0.5, q=Q_KICKED)
        rate = 1.0 - Q_KICKED ** 2
        start = predictions.decoherence_factor(1.0, params).value
        times = np.linspace(10.0, 200.0, 191)

        levy = predictions.decoherence_curve(times, params)
        exponential = start * np.exp(-rate * (times - 1.0))

        self.assertTrue(np.all(np.diff(np.log(levy / exponential)) > 0))

    def test_printed_form_at_long_times(self):
        """Test long times past the E_alpha overflow bound stay finite."""
        params = TheoryParams(alpha=0.05, q=0.0)
        weight = math.sin(0.05 * math.pi) / (0.05 * math.pi)
        t = 1000.0

        value = predictions.decoherence_factor(t, params).value

        expected = math.exp(-t + weight ** 20 * t - math.log(0.05))
        self.assertGreater(value, 0.0)
        self.assertAlmostEqual(value / expected, 1.0, places=9)

    def test_printed_form_at_acceptance_kick(self):
        """Test D stays defined at t = 2000 for the acceptance kick."""
        params = TheoryParams.for_kicks(0.5, 5.8, 2.09)

        curve = predictions.decoherence_curve([500.0, 1500.0, 2000.0],
                                              params)

        self.assertTrue(np.all(curve >= 0.0))
        self.assertTrue(np.all(np.diff(curve) <= 0.0))


class BranchContinuityTests(SimpleTestCase):
    """Test refitted growth laws as alpha crosses 1."""

    def test_refitted_predictions_meet_at_one(self):
        """Test refitted A-constants give matching curves at alpha = 1."""
        times = np.arange(0.0, 201.0)
        energy = 1.5 * times + 4.0 * times ** 0.7
        curve = EnergyCurve(times, energy, np.zeros(201), 1)
        late = times[10:]

        def prediction(alpha):
            constants = fit_growth_constants(curve, alpha).params
            tau_bar = mean_waiting_time(LevyParams(alpha))
            params = TheoryParams(alpha=alpha, q=Q_KICKED,
                                  tau_bar=tau_bar, **constants)
            return predictions.predicted_energy(late, params)

        above = prediction(1.0001)
        gaps = [np.max(np.abs(prediction(1.0 - d) / above - 1.0))
                for d in (1e-2, 1e-3, 1e-4)]

        self.assertLess(gaps[-1], 1e-3)
        self.assertTrue(gaps[0] > gaps[1] > gaps[2])


class PredictedEnergyTests(SimpleTestCase):
    """Test the energy growth laws."""

    def test_subdiffusive_law(self):
        """Test 0.123 * 70 + 2.6 * 70**0.75 is about 71.5."""
        params = TheoryParams(alpha=0.75, q=Q_KICKED, A0=0.123, A1=2.6)

        value = predictions.predicted_energy(70.0, params)

        self.assertAlmostEqual(value, 0.123 * 70 + 2.6 * 70 ** 0.75,
                               places=12)
        self.assertAlmostEqual(value, 71.5, delta=0.1)

    def test_degenerate_subdiffusive_term(self):
        """Test A1 = 0 leaves the linear term."""
        params = TheoryParams(alpha=0.5, q=0.0, A0=0.4)

        self.assertAlmostEqual(
            predictions.predicted_energy(25.0, params), 10.0, places=12
        )

    def test_linear_law(self):
        """Test alpha >= 1 gives A2 t, also on arrays."""
        params = TheoryParams(alpha=2.0, q=0.0, tau_bar=2.0, A2=0.7)

        values = predictions.predicted_energy(np.array([1.0, 10.0]), params)

        np.testing.assert_allclose(values, [0.7, 7.0], rtol=1e-15)

    def test_early_times_rejected(self):
        """Test t < 1 is outside the asymptotic regime."""
        with self.assertRaises(DomainError):
            predictions.predicted_energy(0.5, TheoryParams(0.5, 0.0))
