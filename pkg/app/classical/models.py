"""
Domain types of the classical standard map ensemble.
"""
import math
from dataclasses import dataclass

import numpy as np

from core.exceptions import ConfigurationError, DomainError
from levy.models import NoiseMode
from rotor.models import EnergyCurve, check_times


@dataclass(frozen=True)
class ClassicalState:
    """Phase-space point; x is an angle in [0, 2 pi)."""
    x: float
    p: float

    def __post_init__(self):
        if not 0.0 <= self.x < 2.0 * math.pi:
            raise DomainError(f'x must lie in [0, 2 pi), got {self.x!r}')


@dataclass(frozen=True)
class ClassicalEnsembleConfig:
    """Standard map ensemble: uniform x, Gaussian p of width sigma_p.

    Stroboscopic points are kept for the first section_particles
    particles at every record time.
    """
    K: float
    noise_mode: NoiseMode
    horizon: int
    n_particles: int
    master_seed: int = 0
    sigma_p: float = 1.0
    record_times: tuple = None
    section_particles: int = 500

    def __post_init__(self):
        if self.record_times is None:
            object.__setattr__(
                self, 'record_times', tuple(range(self.horizon + 1))
            )
        object.__setattr__(
            self, 'record_times', tuple(int(t) for t in self.record_times)
        )
        problems = []
        if not self.K >= 0:
            problems.append('K: must be non-negative')
        if not isinstance(self.noise_mode, NoiseMode):
            problems.append('noise_mode: unknown noise mode')
        if self.horizon < 1:
            problems.append('horizon: must be a positive integer')
        if self.n_particles < 1:
            problems.append('n_particles: must be a positive integer')
        if self.master_seed < 0:
            problems.append('master_seed: must be non-negative')
        if not self.sigma_p > 0:
            problems.append('sigma_p: must be positive')
        if self.section_particles < 0:
            problems.append('section_particles: must be non-negative')
        if not self.record_times:
            problems.append('record_times: must not be empty')
        problems += check_times('record_times', self.record_times,
                                self.horizon)
        if problems:
            raise ConfigurationError(problems)


@dataclass(frozen=True, eq=False)
class Section:
    """Stroboscopic points (x, p) with their record times."""
    x: np.ndarray
    p: np.ndarray
    t: np.ndarray


@dataclass(frozen=True, eq=False)
class ClassicalResult:
    energy: EnergyCurve
    section: Section
    seeds: list
