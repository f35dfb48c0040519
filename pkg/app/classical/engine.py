"""
Standard map with noisy kicks.

    p' = p + K sin(x)
    x' = (x + p' d) mod 2 pi

d is the free-evolution length of the period (1 except for timing
noise); a skipped kick leaves p alone and only rotates x.
"""
import logging
import math

import numpy as np

from classical.models import ClassicalResult, ClassicalState, Section
from levy.schedule import build_schedule, realization_seed
from rotor.ensemble import spread
from rotor.models import EnergyCurve

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


def map_step(state, effective_K):
    """One kicked period of the standard map."""
    p = state.p + effective_K * math.sin(state.x)
    return ClassicalState(x=(state.x + p) % TWO_PI, p=p)


def map_jacobian(state, effective_K):
    """d(x', p')/d(x, p); its determinant is exactly 1."""
    c = effective_K * math.cos(state.x)
    return np.array([[1.0 + c, 1.0], [c, 1.0]])


def lyapunov_estimate(state, K, n_steps=10000):
    """Largest Lyapunov exponent of the periodic map from state.

    The tangent vector is propagated with map_jacobian and renormalized
    every step; the exponent is the mean log stretch.
    """
    tangent = np.array([1.0, 0.0])
    total = 0.0
    for _ in range(n_steps):
        tangent = map_jacobian(state, K) @ tangent
        stretch = math.hypot(*tangent)
        total += math.log(stretch)
        tangent /= stretch
        state = map_step(state, K)
    return total / n_steps


def initial_particles(config):
    """Uniform x and Gaussian p, drawn per particle from its own seed."""
    seeds = [realization_seed(config.master_seed, i)
             for i in range(config.n_particles)]
    x = np.empty(config.n_particles)
    p = np.empty(config.n_particles)
    for i, seed in enumerate(seeds):
        rng = np.random.default_rng(
            np.random.SeedSequence(seed, spawn_key=(2,))
        )
        x[i] = rng.uniform(0.0, TWO_PI)
        p[i] = rng.normal(0.0, config.sigma_p)
    return seeds, x, p


def classical_ensemble(config):
    """Evolve every particle through its own kick schedule.

    Records <p**2>/2 over the ensemble and the stroboscopic section of
    the first section_particles particles after each period.
    """
    logger.info(
        'Classical ensemble: mode=%s, particles=%d, horizon=%d',
        config.noise_mode.name, config.n_particles, config.horizon,
    )
    seeds, x, p = initial_particles(config)
    schedules = [build_schedule(config.noise_mode, config.horizon, seed)
                 for seed in seeds]
    mask = np.array([s.mask for s in schedules])
    durations = np.array([s.durations for s in schedules])
    strength = config.K * np.array([s.amplitudes for s in schedules])

    record = set(config.record_times)
    n_section = min(config.section_particles, config.n_particles)
    energies, section = [], []

    def take(t):
        energies.append(p ** 2 / 2.0)
        section.append((x[:n_section].copy(), p[:n_section].copy(), t))

    if 0 in record:
        take(0)
    for n in range(config.horizon):
        kicked = mask[:, n]
        p[kicked] += strength[kicked, n] * np.sin(x[kicked])
        x = (x + p * durations[:, n]) % TWO_PI
        if n + 1 in record:
            take(n + 1)

    samples = np.array(energies).T
    times = np.array(config.record_times)
    logger.info('Classical ensemble finished')
    return ClassicalResult(
        energy=EnergyCurve(
            times=times,
            mean_E=samples.mean(axis=0),
            std_E=spread(samples),
            n_realizations=config.n_particles,
        ),
        section=Section(
            x=np.concatenate([s[0] for s in section]),
            p=np.concatenate([s[1] for s in section]),
            t=np.concatenate([np.full(n_section, s[2]) for s in section]),
        ),
        seeds=seeds,
    )
