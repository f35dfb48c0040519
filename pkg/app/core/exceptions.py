"""
Exceptions raised by the simulation apps.
"""


class SimulationError(Exception):
    """Base class for simulation errors."""


class DomainError(SimulationError, ValueError):
    """Parameter outside the domain of an operation."""


class ConfigurationError(SimulationError):
    """Run configuration failed validation."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__('; '.join(self.violations))

    def __reduce__(self):
        return (self.__class__, (self.violations,))


class GridOverflowError(SimulationError):
    """Probability reached the edge of the momentum grid."""

    def __init__(self, period, occupation, realization=None):
        self.period = period
        self.occupation = occupation
        self.realization = realization
        where = f'period {period}'
        if realization is not None:
            where = f'realization {realization}, {where}'
        super().__init__(
            f'Momentum grid overflow at {where}: boundary occupation '
            f'{occupation:.3e}. Increase grid_M.'
        )

    def for_realization(self, realization):
        """Return a copy tagged with the realization index."""
        return GridOverflowError(self.period, self.occupation, realization)

    def __reduce__(self):
        return (
            self.__class__,
            (self.period, self.occupation, self.realization),
        )


class AccuracyError(SimulationError, ArithmeticError):
    """Evaluation did not reach the requested accuracy."""

    def __init__(self, message, estimate, error_bound):
        self.estimate = estimate
        self.error_bound = error_bound
        super().__init__(
            f'{message} (best estimate {estimate!r}, '
            f'error bound {error_bound:.3e})'
        )
        self.message = message

    def __reduce__(self):
        return (
            self.__class__,
            (self.message, self.estimate, self.error_bound),
        )


class InsufficientDataError(SimulationError, ValueError):
    """Too few usable points for a fit."""
