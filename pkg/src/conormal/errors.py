"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .poset import ValidationReport


class CornerError(Exception):
    """Base class for every error raised by :mod:`conormal`."""


class ParseError(CornerError, ValueError):
    """Malformed poset file. ``lineno`` is 1-based, or ``None`` for stream-level errors."""

    def __init__(self, reason: str, lineno: int | None = None):
        self.reason = reason
        self.lineno = lineno
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(where + reason)


class ValidationError(CornerError, ValueError):
    """The data is well formed but violates a structural invariant."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__("invalid corner poset:\n" + report.format())


class AmbiguousAdjacencyError(ValidationError):
    """Adjacency cannot be derived because an index set occurs more than once."""

    def __init__(self, report: "ValidationReport", index_set: tuple[int, ...]):
        self.index_set = index_set
        super().__init__(report)


class InvariantBreach(CornerError, RuntimeError):
    """An internal consistency check failed (d^2 != 0, path mismatch).

    Seeing this means there is a bug, not bad input.
    """
