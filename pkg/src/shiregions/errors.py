"""Exception types shared across the package."""


class ShiError(ValueError):
    """Bad input: a malformed sequence, diagram, graph or parameter."""


class NotParkingError(ShiError):
    """A sequence that was required to be a (k-)parking function is not one."""


class GraphConditionError(ShiError):
    """A sequence fails the nearest-repeat graph condition.

    ``pair`` is the offending index pair ``(i, j)``: ``j`` is the first
    index after ``i`` carrying the same value, and ``{i, j}`` is not an edge.
    """

    def __init__(self, pair, message=None):
        self.pair = tuple(pair)
        if message is None:
            message = "repeat pair %d,%d is not an edge of the graph" % self.pair
        super().__init__(message)


class InvariantError(RuntimeError):
    """An internal consistency check failed; this indicates a bug."""
