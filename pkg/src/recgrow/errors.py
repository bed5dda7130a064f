"""Exception hierarchy shared across the package."""


class RecgrowError(Exception):
    """Base class for all recgrow-specific errors."""


class InvalidParamsError(RecgrowError, ValueError):
    """Raised when a coefficient set fails the validity conditions.

    Carries the failing ``ValidationReport`` in ``report``.
    """

    def __init__(self, report):
        self.report = report
        names = ", ".join(name for name, _ in report.violations)
        super().__init__(f"invalid parameters, failed condition(s): {names}")


class CapExceededError(RecgrowError):
    """Requested index exceeds the configured evaluation cap.

    This is resource protection, not a mathematical failure: term sizes grow
    doubly exponentially, so the cap bounds memory, not validity.
    """


class ToleranceUnachievableError(RecgrowError):
    """The requested tolerance would exceed the working precision budget."""


class NonIntegerParamsError(RecgrowError, ValueError):
    """An operation restricted to integer coefficients got non-integers."""


class CacheCorruptionError(RecgrowError):
    """A cache file failed to parse or its checksum did not match."""
