"""
Ensemble runs over independently seeded realizations.
"""
import logging
import os
from functools import partial
from multiprocessing import Pool

import numpy as np

from core.exceptions import GridOverflowError
from levy.schedule import build_schedule, realization_seed
from rotor.models import (
    EnergyCurve,
    EnsembleResult,
    F0Series,
    MomentumProfile,
)
from rotor.quantum import evolve_trajectory

logger = logging.getLogger(__name__)


def draw_beta(seed, width):
    """Quasi-momentum of one realization, wrapped into [-0.5, 0.5).

    Drawn from a stream of its own so the kick schedule of a seed does
    not depend on whether quasi-momentum averaging is enabled.
    """
    if width == 0:
        return 0.0
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(1,)))
    beta = rng.normal(0.0, width)
    return float((beta + 0.5) % 1.0 - 0.5)


def run_realization(config, index):
    """Evolve realization index of config; returns (seed, Trajectory)."""
    seed = realization_seed(config.master_seed, index)
    schedule = build_schedule(config.noise_mode, config.horizon, seed)
    try:
        trajectory = evolve_trajectory(
            config, schedule, draw_beta(seed, config.beta_spread)
        )
    except GridOverflowError as err:
        raise err.for_realization(index) from None
    logger.debug('Realization %d done (%d kicks)', index, schedule.n_kicks)
    return seed, trajectory


def spread(samples):
    """Across-realization standard deviation; exactly 0 for equal rows."""
    std = samples.std(axis=0)
    std[np.ptp(samples, axis=0) == 0] = 0.0
    return std


def realizations(config, workers=1):
    """Yield (seed, Trajectory) in realization index order."""
    job = partial(run_realization, config)
    indices = range(config.ensemble_size)
    if workers == 1:
        yield from map(job, indices)
        return
    chunksize = max(1, config.ensemble_size // (4 * workers))
    with Pool(processes=workers) as pool:
        yield from pool.imap(job, indices, chunksize=chunksize)


def ensemble_run(config, workers=None):
    """Ensemble-average energy, f(0) and momentum profiles.

    Results arrive in index order whatever the worker count, so the
    reduction is the same sequence of floating point operations for
    serial and parallel runs.
    """
    workers = workers or os.cpu_count() or 1
    workers = min(workers, config.ensemble_size)
    logger.info(
        'Ensemble run: mode=%s, realizations=%d, horizon=%d, workers=%d',
        config.noise_mode.name, config.ensemble_size, config.horizon,
        workers,
    )
    n_times = len(config.record_times)
    energies = np.empty((config.ensemble_size, n_times))
    zeros = np.empty((config.ensemble_size, n_times))
    profile_sums = {t: None for t in config.profile_times}
    seeds = []

    for index, (seed, trajectory) in enumerate(realizations(config, workers)):
        seeds.append(seed)
        energies[index] = trajectory.energy
        zeros[index] = trajectory.f0
        for t, profile in trajectory.profiles.items():
            if profile_sums[t] is None:
                profile_sums[t] = profile.f.copy()
            else:
                profile_sums[t] += profile.f

    times = np.array(config.record_times)
    # realizations with different beta share the bins centred at m hbar_s
    p_grid = np.arange(-config.grid_M, config.grid_M + 1) * config.hbar_s
    profiles = []
    for t in config.profile_times:
        f = profile_sums[t] / config.ensemble_size
        profiles.append(MomentumProfile(p_grid, f / f.sum(), t))

    logger.info('Ensemble run finished: %d realizations', len(seeds))
    return EnsembleResult(
        energy=EnergyCurve(
            times=times,
            mean_E=energies.mean(axis=0),
            std_E=spread(energies),
            n_realizations=config.ensemble_size,
        ),
        profiles=profiles,
        f0=F0Series(
            times=times,
            f0=zeros.mean(axis=0),
            f0_std=spread(zeros),
        ),
        seeds=seeds,
    )
