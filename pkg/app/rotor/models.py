"""
Domain types of the quantum kicked rotor.
"""
from dataclasses import dataclass, field

import numpy as np

from core.exceptions import ConfigurationError
from levy.models import NoiseMode


def check_times(name, times, horizon):
    """Return violations for a sorted, duplicate-free time list in [0, N]."""
    times = list(times)
    problems = []
    if any(int(t) != t for t in times):
        problems.append(f'{name}: times must be integers')
    elif times != sorted(set(times)):
        problems.append(f'{name}: times must be sorted and unique')
    elif times and (times[0] < 0 or times[-1] > horizon):
        problems.append(f'{name}: times must lie in [0, {horizon}]')
    return problems


@dataclass(frozen=True)
class SimConfig:
    """Physical and numerical parameters of a quantum run.

    record_times defaults to every period 0..horizon. profile_times
    selects the record times at which full momentum profiles are kept.
    """
    K: float
    hbar_s: float
    grid_M: int
    horizon: int
    noise_mode: NoiseMode
    ensemble_size: int = 1
    master_seed: int = 0
    initial_sigma_p: float = 2.0
    beta_spread: float = 0.0
    record_times: tuple = None
    profile_times: tuple = ()

    def __post_init__(self):
        if self.record_times is None:
            object.__setattr__(
                self, 'record_times', tuple(range(self.horizon + 1))
            )
        object.__setattr__(
            self, 'record_times', tuple(int(t) for t in self.record_times)
        )
        object.__setattr__(
            self, 'profile_times', tuple(int(t) for t in self.profile_times)
        )
        problems = self.violations()
        if problems:
            raise ConfigurationError(problems)

    def violations(self):
        problems = []
        if not self.K >= 0:
            problems.append('K: must be non-negative')
        if not self.hbar_s > 0:
            problems.append('hbar_s: must be positive')
        if self.grid_M < 1:
            problems.append('grid_M: must be a positive integer')
        if self.horizon < 1:
            problems.append('horizon: must be a positive integer')
        if not isinstance(self.noise_mode, NoiseMode):
            problems.append('noise_mode: unknown noise mode')
        if self.ensemble_size < 1:
            problems.append('ensemble_size: must be a positive integer')
        if self.master_seed < 0:
            problems.append('master_seed: must be non-negative')
        if not self.initial_sigma_p > 0:
            problems.append('initial_sigma_p: must be positive')
        if not self.beta_spread >= 0:
            problems.append('beta_spread: must be non-negative')
        if not self.record_times:
            problems.append('record_times: must not be empty')
        problems += check_times('record_times', self.record_times,
                                self.horizon)
        problems += check_times('profile_times', self.profile_times,
                                self.horizon)
        if not set(self.profile_times) <= set(self.record_times):
            problems.append('profile_times: must be a subset of record_times')
        return problems


@dataclass(frozen=True, eq=False)
class QuantumState:
    """Amplitudes a_m over the momentum ladder m = -M..M.

    Momentum of ladder site m is p = (m + beta) * hbar_s.
    """
    amplitudes: np.ndarray
    hbar_s: float
    beta: float = 0.0

    @property
    def M(self):
        return (len(self.amplitudes) - 1) // 2

    @property
    def m(self):
        return np.arange(-self.M, self.M + 1)

    @property
    def p(self):
        return (self.m + self.beta) * self.hbar_s

    @property
    def probabilities(self):
        return np.abs(self.amplitudes) ** 2

    @property
    def norm(self):
        return float(np.sum(self.probabilities))

    @property
    def energy(self):
        """<p**2>/2 in scaled units."""
        return float(np.sum(self.probabilities * self.p ** 2) / 2.0)

    @property
    def f0(self):
        """Occupation of the zero-momentum site."""
        return float(self.probabilities[self.M])

    @property
    def boundary_occupation(self):
        probs = self.probabilities
        return float(probs[0] + probs[-1])


@dataclass(frozen=True, eq=False)
class MomentumProfile:
    """Normalized momentum distribution f(p) at one time.

    p_values are centres of bins of width hbar_s; with quasi-momentum
    beta in [-0.5, 0.5) the state at (m + beta) hbar_s counts in bin m.
    """
    p_values: np.ndarray
    f: np.ndarray
    time: int


@dataclass(frozen=True, eq=False)
class EnergyCurve:
    """Ensemble mean energy with across-realization spread."""
    times: np.ndarray
    mean_E: np.ndarray
    std_E: np.ndarray
    n_realizations: int

    def __post_init__(self):
        if not len(self.times) == len(self.mean_E) == len(self.std_E):
            raise ValueError('times, mean_E and std_E must have equal length')


@dataclass(frozen=True, eq=False)
class F0Series:
    """Ensemble zero-momentum occupation f(0) over time."""
    times: np.ndarray
    f0: np.ndarray
    f0_std: np.ndarray


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Observables of one realization at the record times."""
    times: np.ndarray
    energy: np.ndarray
    f0: np.ndarray
    profiles: dict = field(default_factory=dict)


@dataclass(frozen=True, eq=False)
class EnsembleResult:
    energy: EnergyCurve
    profiles: list
    f0: F0Series
    seeds: list
