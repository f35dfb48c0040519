"""
Noise models for the kick sequence.
"""
from dataclasses import dataclass

import numpy as np

from core.exceptions import DomainError


@dataclass(frozen=True)
class LevyParams:
    """Parameters of the discrete Lévy waiting-time distribution."""
    alpha: float

    def __post_init__(self):
        if not self.alpha > 0:
            raise DomainError(f'alpha must be positive, got {self.alpha!r}')

    @property
    def mean_diverges(self):
        """True in the non-stationary regime 0 < alpha < 1."""
        return self.alpha < 1


class NoiseMode:
    """Base class for the kick-sequence noise modes."""
    name = None


@dataclass(frozen=True)
class Periodic(NoiseMode):
    """Noise-free kicking at every period."""
    name = 'periodic'


@dataclass(frozen=True)
class Levy(NoiseMode):
    """Kicks separated by Lévy distributed waiting times."""
    alpha: float
    name = 'levy'

    def __post_init__(self):
        LevyParams(self.alpha)

    @property
    def params(self):
        return LevyParams(self.alpha)


def _check_fraction(field, value):
    if not 0 < value < 1:
        raise DomainError(f'{field} must lie in (0, 1), got {value!r}')


@dataclass(frozen=True)
class StationaryTiming(NoiseMode):
    """Kick period jittered uniformly by up to delta_max periods."""
    delta_max: float
    name = 'stn'

    def __post_init__(self):
        _check_fraction('delta_max', self.delta_max)


@dataclass(frozen=True)
class Amplitude(NoiseMode):
    """Kick strength jittered uniformly by up to eps_max of K."""
    eps_max: float
    name = 'amplitude'

    def __post_init__(self):
        _check_fraction('eps_max', self.eps_max)


@dataclass(frozen=True, eq=False)
class KickSchedule:
    """Realized noise of one run over periods n = 1..N.

    mask[n - 1] is True when the kick at period n is applied (g_n = 0).
    """
    mask: np.ndarray
    durations: np.ndarray
    amplitudes: np.ndarray
    seed: int

    def __post_init__(self):
        n = len(self.mask)
        if len(self.durations) != n or len(self.amplitudes) != n:
            raise DomainError(
                'mask, durations and amplitudes must have equal length'
            )
        if np.any(self.durations <= 0):
            raise DomainError('durations must be positive')

    def __len__(self):
        return len(self.mask)

    @property
    def horizon(self):
        return len(self.mask)

    @property
    def kick_times(self):
        """1-based periods at which a kick is applied."""
        return np.flatnonzero(self.mask) + 1

    @property
    def waiting_times(self):
        return np.diff(self.kick_times)

    @property
    def n_kicks(self):
        return int(np.count_nonzero(self.mask))
