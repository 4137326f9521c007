"""Exception hierarchy shared across the package.

The CLI maps these onto its exit-code contract, so new error conditions
should reuse one of the classes below rather than raising bare ValueError.
"""


class AdjointLabError(Exception):
    """Base class for all package errors."""


class GraphParseError(AdjointLabError):
    """Malformed graph input (edge list or graph6)."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CapExceededError(AdjointLabError):
    """Input is larger than the computational cap of the requested operation."""


class EdgelessGraphError(AdjointLabError):
    """Operation requires at least one edge (line graph, hat construction, t)."""


class DisconnectedGraphError(AdjointLabError):
    """Operation's guarantees hold for connected graphs only and force=False."""


class NotASubgraphError(AdjointLabError):
    """Claimed subgraph relation does not hold."""


class InvalidCoverError(AdjointLabError):
    """Vertex-set family is not a partition into cliques."""


class NotIndependentError(AdjointLabError):
    """Claimed independent set contains an edge of the hat graph."""


class BetaRangeError(AdjointLabError):
    """No root of the independence polynomial found in (0, 1]."""


class RootSolverError(AdjointLabError):
    """Numeric all-roots solver failed residual acceptance after escalation."""
