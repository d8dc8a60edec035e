"""Exception hierarchy shared by the library and the CLI exit-code mapping."""
from __future__ import annotations


class MiniPaintError(Exception):
    """Base class for all errors raised by minipaint."""


class InputError(MiniPaintError, ValueError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class StrokeError(InputError):
    """A stroke cannot be applied: empty, out of range, or disconnected area."""

    def __init__(self, message: str, index: int | None = None, reason: str = "invalid"):
        self.index = index
        self.reason = reason
        if index is not None:
            message = f"stroke {index}: {message}"
        super().__init__(message)


class ParseError(InputError):
    """Document could not be parsed; ``where`` names the line or field."""

    def __init__(self, message: str, where: str | None = None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


class CapacityError(MiniPaintError):
    """A configured search or size budget was exceeded (CLI exit code 3)."""


class SearchExhaustedError(MiniPaintError):
    """The canonical search found nothing within its proven bounds.

    This would contradict the correctness argument of the algorithm, so it is
    never swallowed.
    """
