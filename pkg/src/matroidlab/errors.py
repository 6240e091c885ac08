"""Shared exception types."""


class MatroidLabError(Exception):
    """Base class for all library errors."""


class DimensionMismatchError(MatroidLabError):
    """Operands live in different spaces."""


class BudgetExceededError(MatroidLabError):
    """An enumeration or search exceeded its configured resource cap."""


class InvalidInputError(MatroidLabError):
    """An argument violates a documented precondition."""


class FormatError(MatroidLabError):
    """A file does not conform to its format; carries a 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
