"""
Kick schedules for every noise mode.
"""
from functools import lru_cache

import numpy as np

from core.exceptions import DomainError
from levy.distribution import WaitingTimeTable
from levy.models import (
    Amplitude,
    KickSchedule,
    Levy,
    Periodic,
    StationaryTiming,
)


def realization_seed(master_seed, index):
    """Fold a realization index into the master seed.

    Counter-based: the seed of realization i depends only on
    (master_seed, i), never on execution order or worker count.
    """
    if master_seed < 0 or index < 0:
        raise DomainError('master_seed and index must be non-negative')
    seq = np.random.SeedSequence(master_seed, spawn_key=(index,))
    return int(seq.generate_state(1, dtype=np.uint64)[0])


def build_schedule(mode, horizon, seed):
    """Build the kick schedule for one realization of a noise mode."""
    if int(horizon) != horizon or horizon < 1:
        raise DomainError(f'horizon must be a positive integer, got {horizon}')
    horizon = int(horizon)
    rng = np.random.default_rng(seed)
    mask = np.ones(horizon, dtype=bool)
    durations = np.ones(horizon)
    amplitudes = np.ones(horizon)

    if isinstance(mode, Levy):
        table = waiting_time_table(mode.params, horizon)
        mask[:] = False
        n = 1
        while n <= horizon:
            mask[n - 1] = True
            n += int(table.lookup(rng.random()))
    elif isinstance(mode, StationaryTiming):
        durations += rng.uniform(-mode.delta_max, mode.delta_max, horizon)
    elif isinstance(mode, Amplitude):
        amplitudes += rng.uniform(-mode.eps_max, mode.eps_max, horizon)
    elif not isinstance(mode, Periodic):
        raise DomainError(f'Unknown noise mode {mode!r}')

    return KickSchedule(
        mask=mask,
        durations=durations,
        amplitudes=amplitudes,
        seed=seed,
    )


@lru_cache(maxsize=16)
def waiting_time_table(params, horizon):
    """Waiting times tabulated up to horizon; longer waits end the run."""
    return WaitingTimeTable(params, horizon)


def mean_kick_counts(mode, horizon, seeds, times=None):
    """Mean number of kicks applied up to each time over seeded schedules.

    times defaults to 0..horizon; no kick has acted at t = 0.
    """
    if len(seeds) == 0:
        raise DomainError('at least one seed is required')
    counts = np.zeros(horizon + 1)
    for seed in seeds:
        counts[1:] += np.cumsum(build_schedule(mode, horizon, seed).mask)
    counts /= len(seeds)
    if times is None:
        return counts
    return counts[np.asarray(times, dtype=int)]
