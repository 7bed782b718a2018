"""Exception types shared across the package."""


class JalgError(Exception):
    """Base class for all package errors."""


class FieldMismatchError(JalgError):
    """Objects over different ground fields were combined."""


class DimensionError(JalgError):
    """A vector, map, or table has the wrong dimension."""


class VerificationError(JalgError):
    """A construction was attempted from data that fails its axioms."""


class ParseError(JalgError):
    """A data file or expression could not be parsed.

    Carries the 1-based line number when one is known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetError(JalgError):
    """A search exceeded its configured work budget."""
