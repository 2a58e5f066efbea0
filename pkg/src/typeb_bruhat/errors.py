"""Exception hierarchy shared by all modules."""


class TypeBError(Exception):
    """Base class for every error raised by this package."""


class ContractError(TypeBError, ValueError):
    """An argument violates the documented precondition of an operation."""


class ParseError(TypeBError, ValueError):
    """Malformed text input; ``position`` is the 1-based token index, if known."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"token {position}: {message}"
        super().__init__(message)
        self.position = position


class ValidationError(TypeBError, ValueError):
    """Blocks or one-line data do not describe a k-Grassmannian permutation."""


class InvariantError(TypeBError, AssertionError):
    """An internal consistency identity failed; indicates a bug."""


class ResourceGuardError(TypeBError, RuntimeError):
    """Requested rank exceeds the configured size bound."""
