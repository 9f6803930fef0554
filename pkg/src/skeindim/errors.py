"""Exception types shared across the package.

The CLI maps ``InputError`` to exit code 2 and the other two to exit code 1.
"""


class InputError(ValueError):
    """Caller supplied something outside an operation's preconditions."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagreed."""


class VerificationError(ConsistencyError):
    """An identity that must hold exactly failed; carries the offending term."""

    def __init__(self, message, term=None):
        super().__init__(message)
        self.term = term
