"""Exception types shared across the package."""

from __future__ import annotations


class SytError(Exception):
    """Base class for all domain errors raised by this package."""


class ContainmentError(SytError):
    """The inner partition is not contained in the outer one."""


class SpecError(SytError):
    """Invalid strip parameters (bad head/tail, out-of-range columns, N < 0)."""


class ShapeError(SytError):
    """A shape does not satisfy the precondition of an operation."""


class BudgetExceeded(SytError):
    """A state/term budget was exceeded; carries the offending estimate."""

    def __init__(self, message: str, estimate: int | None = None):
        super().__init__(message)
        self.estimate = estimate


class LimitExceeded(SytError):
    """Enumeration would produce more objects than the caller's limit."""


class IntegralityError(SytError):
    """An exact rational result that must be a nonnegative integer is not."""


class SandwichError(SytError):
    """Diagonal-cut interleaving failed; the transfer sweep cannot proceed."""


class CostGuard(SytError):
    """A numerical-verification request is beyond the configured cost limit."""
