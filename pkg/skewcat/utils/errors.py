"""Common error types for skewcat.

Every error maps to a fixed CLI exit code. Law failures are not errors;
they are report entries.
"""

from typing import Optional


class SkewcatError(Exception):
    """Base exception class for all skewcat errors."""

    exit_code = 2

    def __init__(self, message: str, location: Optional[str] = None):
        super().__init__(message)
        self.location = location

    def __str__(self) -> str:
        message = super().__str__()
        if self.location:
            return f"{message} (at {self.location})"
        return message


class FormatError(SkewcatError):
    """Raised when an input file cannot be parsed or violates its schema."""
    pass


class StructuralError(SkewcatError):
    """Raised when tables are malformed: dangling identifiers, missing components."""
    pass


class PreconditionError(SkewcatError):
    """Raised when an operation's precondition does not hold."""

    exit_code = 3


class BoundExceededError(PreconditionError):
    """Raised when an enumeration or closure pass exceeds its configured bound."""
    pass


class ConsistencyError(SkewcatError):
    """Raised when a construction produces output that fails its own checks."""

    exit_code = 4
