"""Exception types shared across the package."""


class ToricError(Exception):
    """Base class for every error raised by toricgens."""


class ValidationError(ToricError, ValueError):
    """Input does not satisfy a documented precondition."""


class InvariantViolation(ToricError, RuntimeError):
    """A situation the underlying combinatorial argument rules out.

    Raising this always indicates a bug in the implementation; ``trace``
    carries whatever state was available when the check failed.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
