"""
Experiments and run manifests.
"""
from dataclasses import dataclass, field
from datetime import datetime
from typing import ClassVar

from core.exceptions import ConfigurationError


@dataclass(frozen=True)
class ExperimentSpec:
    """A named experiment bound to one config shape.

    required lists config keys the experiment needs beyond what the
    shape itself requires.
    """
    name: ClassVar[str] = None
    shape: ClassVar[str] = 'quantum'
    required: ClassVar[tuple] = ()

    def missing_bindings(self, raw_config):
        return [
            f'{key}: required by experiment {self.name}'
            for key in self.required if key not in raw_config
        ]


@dataclass(frozen=True)
class EnergyGrowth(ExperimentSpec):
    """Ensemble energy curve with the growth law fits."""
    name: ClassVar[str] = 'energy_growth'
    weighted: bool = False


@dataclass(frozen=True)
class MomentumProfiles(ExperimentSpec):
    """Ensemble momentum profiles and their shape classes."""
    name: ClassVar[str] = 'momentum_profiles'
    required: ClassVar[tuple] = ('profile_times',)
    floor: float = None


@dataclass(frozen=True)
class F0Decay(ExperimentSpec):
    """Zero-momentum occupation and its decay law."""
    name: ClassVar[str] = 'f0_decay'


@dataclass(frozen=True)
class ClassicalSection(ExperimentSpec):
    """Classical energy curve and stroboscopic section."""
    name: ClassVar[str] = 'classical_section'
    shape: ClassVar[str] = 'classical'


@dataclass(frozen=True)
class TheoryOverlay(ExperimentSpec):
    """Predicted decoherence factor and energy growth."""
    name: ClassVar[str] = 'theory_overlay'
    shape: ClassVar[str] = 'theory'


EXPERIMENTS = {
    spec.name: spec
    for spec in (EnergyGrowth, MomentumProfiles, F0Decay,
                 ClassicalSection, TheoryOverlay)
}


def experiment_for(name, **bindings):
    """Create and return the experiment called name."""
    try:
        return EXPERIMENTS[name](**bindings)
    except KeyError:
        raise ConfigurationError([
            f'experiment: unknown experiment {name!r}, expected one of '
            + ', '.join(EXPERIMENTS)
        ]) from None


@dataclass
class RunManifest:
    """Everything needed to reproduce the files of a run.

    config is the raw key/value snapshot the run was validated from,
    with command-line overrides applied.
    """
    experiment: str
    command: str
    config: dict
    seeds: list
    artifacts: list
    started_at: datetime
    finished_at: datetime = None
    wall_clock_seconds: float = 0.0
    versions: dict = field(default_factory=dict)
