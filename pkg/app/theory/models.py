"""
Parameters of the closed-form predictions.
"""
from dataclasses import dataclass

from core.exceptions import DomainError
from levy.distribution import mean_waiting_time
from levy.models import LevyParams
from theory.predictions import q_factor


@dataclass(frozen=True)
class TheoryParams:
    """Inputs of the decoherence factor and the energy growth laws.

    tau_bar is the mean waiting time, present only for alpha > 1.
    ml_sign selects the sign of the Mittag-Leffler argument for
    alpha < 1: +1 is the printed form, -1 the relaxation form.
    """
    alpha: float
    q: float
    tau_bar: float = None
    A0: float = 0.0
    A1: float = 0.0
    A2: float = 0.0
    t_b: float = None
    ml_sign: int = 1

    def __post_init__(self):
        if not self.alpha > 0:
            raise DomainError(f'alpha must be positive, got {self.alpha!r}')
        if not -1.0 <= self.q <= 1.0:
            raise DomainError(f'q must lie in [-1, 1], got {self.q!r}')
        if self.alpha > 1:
            if self.tau_bar is None or not self.tau_bar > 1:
                raise DomainError('tau_bar > 1 is required for alpha > 1')
        elif self.tau_bar is not None:
            raise DomainError('tau_bar diverges for alpha <= 1')
        if min(self.A0, self.A1, self.A2) < 0:
            raise DomainError('A0, A1 and A2 must be non-negative')
        if self.t_b is not None and not self.t_b > 0:
            raise DomainError('t_b must be positive')
        if self.ml_sign not in (1, -1):
            raise DomainError(f'ml_sign must be +1 or -1, got {self.ml_sign}')

    @classmethod
    def for_kicks(cls, alpha, K, hbar_s, n_terms=40, **constants):
        """Parameters for kicks of strength K: q = q(K/hbar_s)."""
        tau_bar = mean_waiting_time(LevyParams(alpha))
        return cls(
            alpha=alpha,
            q=q_factor(K, hbar_s, n_terms),
            tau_bar=tau_bar,
            **constants,
        )
