"""
Evaluation options for the special functions.
"""
from dataclasses import dataclass

from core.exceptions import DomainError


@dataclass(frozen=True)
class MLEvalOptions:
    """Accuracy controls for mittag_leffler."""
    rel_tol: float = 1e-10
    max_terms: int = 20000

    def __post_init__(self):
        if not 0 < self.rel_tol <= 1e-4:
            raise DomainError(
                f'rel_tol must lie in (0, 1e-4], got {self.rel_tol!r}'
            )
        if self.max_terms < 100:
            raise DomainError(
                f'max_terms must be at least 100, got {self.max_terms!r}'
            )
