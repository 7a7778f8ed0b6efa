"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class QIndepError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameters(QIndepError, ValueError):
    """A construction or routine was called with out-of-range arguments."""


class InvalidInput(QIndepError, ValueError):
    """An input object violates a precondition (wrong graph class, bad witness, ...)."""


class ParseError(QIndepError, ValueError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)


class SizeLimitError(QIndepError, ValueError):
    """Input exceeds the desk-scale limit of an exact routine."""


class NumericalFailure(QIndepError, ArithmeticError):
    def __init__(self, message: str, residual: float | None = None):
        self.residual = residual
        if residual is not None:
            message = f"{message} (residual {residual:.3e})"
        super().__init__(message)
