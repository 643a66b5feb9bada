"""Exception hierarchy shared by all perzeta modules."""


class PerzetaError(Exception):
    """Base class for all errors raised by perzeta."""


class DomainError(PerzetaError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class DivergenceError(DomainError):
    """The requested value is a divergent series (e.g. F(0, s) with s <= 1)."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class ConvergenceError(PerzetaError):
    """A series failed to meet its stop criterion within the term budget.

    Attributes
    ----------
    achieved_bound : float
        The tail/term bound reached when the budget ran out.
    """

    def __init__(self, message, achieved_bound=float("nan")):
        super().__init__(message)
        self.achieved_bound = achieved_bound


class ConditioningError(PerzetaError):
    """A Gram matrix could not be factorized even with maximal jitter.

    Attributes
    ----------
    jitter_ladder : tuple of float
        The relative jitter values that were attempted, in order.
    """

    def __init__(self, message, jitter_ladder=()):
        super().__init__(message)
        self.jitter_ladder = tuple(jitter_ladder)


class OracleConfigError(PerzetaError):
    """The oracle configuration cannot reach its precision target."""
