"""Exception hierarchy shared across the package."""


class ArcwalkError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(ArcwalkError, ValueError):
    """Invalid graph data (bad edge list, out-of-range vertex, ...)."""


class Graph6Error(GraphError):
    """Malformed graph6 record.  ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class OddCycleError(GraphError):
    """A bipartite-only construction was asked for a non-bipartite graph.

    ``cycle`` holds the vertices of an odd cycle witnessing the failure.
    """

    def __init__(self, cycle: tuple[int, ...], message: str | None = None):
        super().__init__(
            message
            or "graph is not bipartite; odd cycle: " + "-".join(map(str, cycle))
        )
        self.cycle = tuple(cycle)


class OperatorError(ArcwalkError, ValueError):
    """Walk operators requested for a graph where they are undefined."""


class EnumerationError(ArcwalkError, ValueError):
    """Built-in graph generation asked beyond its supported range."""


class InvariantError(ArcwalkError, RuntimeError):
    """An exact identity that must always hold failed.  Always a bug."""
