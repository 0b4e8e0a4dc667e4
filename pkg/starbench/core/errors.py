"""Exception hierarchy for starbench.

Budget exhaustion is never an exception; searches report it through
their outcome status instead.
"""

from __future__ import annotations


class StarbenchError(Exception):
    """Root of all library errors."""


class InvalidParameterError(StarbenchError, ValueError):
    """An argument violates an operation's precondition."""


class SizeLimitError(StarbenchError):
    """An exhaustive operation or capped search was asked for too large an instance."""


class PreconditionError(StarbenchError):
    """A lemma hypothesis does not hold for the given instance."""


class ConsistencyError(StarbenchError):
    """An internal self-check disagreed with a closed-form value."""

    def __init__(self, message: str, *, expected: object = None, actual: object = None):
        super().__init__(f"{message} (expected={expected}, actual={actual})")
        self.expected = expected
        self.actual = actual


class FormatError(StarbenchError, ValueError):
    """Malformed text input."""

    def __init__(self, message: str, *, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")
        self.line = line
