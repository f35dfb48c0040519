"""
Fit and classification results.
"""
from dataclasses import dataclass, field

UNIDENTIFIABLE = 'alpha-unidentifiable'


@dataclass(frozen=True)
class FitResult:
    """Least-squares fit of one model over a time window.

    params and sigmas map parameter names to values and one-sigma
    uncertainties.  aicc is the small-sample corrected information
    criterion of the Gaussian residual likelihood.
    """
    model_name: str
    params: dict
    sigmas: dict
    rss: float
    aicc: float
    t_min: float
    t_max: float
    n_points: int
    flags: tuple = field(default=())

    @property
    def alpha_unidentifiable(self):
        return UNIDENTIFIABLE in self.flags

    def rows(self):
        """(model, param, value, sigma) rows in parameter order."""
        return [
            (self.model_name, name, value, self.sigmas[name])
            for name, value in self.params.items()
        ]


@dataclass(frozen=True)
class F0DecayFit:
    """Exponential against power-law decay of f(0)."""
    preferred: str
    exponential: FitResult
    power_law: FitResult

    @property
    def fits(self):
        return [self.exponential, self.power_law]


@dataclass(frozen=True)
class ProfileClass:
    """Shape class of a momentum profile.

    kind is 'exponential' (width xi) or 'gaussian' (width sigma); the
    residuals of both log-density fits are kept for inspection.
    """
    kind: str
    width: float
    exponential_rss: float
    gaussian_rss: float
    n_bins: int
