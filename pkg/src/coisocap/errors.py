"""Exception types shared across the package."""


class CoisocapError(Exception):
    """Base class for all package-specific errors."""


class OutOfRangeError(CoisocapError, ValueError):
    """An argument violates a stated precondition."""


class CapExceededError(CoisocapError, ValueError):
    """A naive-oracle call exceeds the configured size cap."""


class ExprParseError(CoisocapError, ValueError):
    """A product-object expression does not match the grammar."""


class IntervalConflictError(CoisocapError, RuntimeError):
    """Two certified bounds contradict each other (lower > upper).

    This is always an internal error: it means the inequality registry
    was combined incorrectly, never that the inputs were bad.
    """
