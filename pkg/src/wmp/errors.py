"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Base class for all errors raised by :mod:`wmp`."""


class InvalidEdge(GraphError):
    """An edge is a loop or names a vertex outside the graph."""


class SizeOutOfRange(GraphError):
    """A vertex count (or edge count, or product size) exceeds a hard cap."""


class EmptySelection(GraphError):
    """An operation received an empty vertex or edge set."""


class SizeMismatch(GraphError):
    """Two graphs were required to have the same order and do not."""


class ParseError(GraphError):
    """Malformed graph6 text or graph expression.

    ``position`` is the 0-based character offset where parsing failed,
    or ``None`` when no single offset is meaningful.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
