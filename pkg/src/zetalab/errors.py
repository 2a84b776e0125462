"""Exception types shared across the package.

Argument-shape problems (wrong length, empty list, non-positive step)
raise plain ValueError. The classes below mark *mathematical* failure
modes that callers may want to catch separately: poles, near-singular
denominators, series that refuse to converge, and guards against
accidentally quadratic work.
"""


class ZetalabError(Exception):
    """Base class for every error raised deliberately by this package."""


class DomainError(ZetalabError, ValueError):
    """Input lies outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """Evaluation was requested exactly at a pole."""


class SingularFactorError(DomainError):
    """The eta-to-zeta conversion factor is too close to zero to divide
    by, and the caller disabled the fallback evaluation path."""


class AccelerationError(ZetalabError):
    """Series acceleration could not promise the requested tolerance.

    Carries the best value obtained so far and the error estimate that
    failed the tolerance check, so callers can decide whether the
    partial answer is still useful.
    """

    def __init__(self, message: str, best_value: complex, error_estimate: float):
        super().__init__(message)
        self.best_value = best_value
        self.error_estimate = error_estimate


class CostGuardError(ZetalabError):
    """A quadratic-cost path was requested above its size guard."""
