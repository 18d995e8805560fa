"""Perm Pattern exceptions.

All errors raised on bad input derive from ValueError, so callers that
only care about "input was rejected" can catch that.
"""


class PermPatternError(ValueError):
    """Base class for perm-pattern errors."""


class NotABijection(PermPatternError):
    """Values do not form a permutation of [1, n]."""


class LengthMismatch(PermPatternError):
    """Certificate length differs from pattern length."""


class IndexOutOfRange(PermPatternError):
    """Position outside [1, n] or not strictly increasing."""


class ScaleExceeded(PermPatternError):
    """Input is larger than the operation supports."""


class MalformedInput(PermPatternError):
    """Text could not be parsed in the expected file format."""


class NotASimpleGraph(PermPatternError):
    """Graph has a self-loop, a duplicate edge or an unknown vertex."""


class NotAnEdge(PermPatternError):
    """Vertex pair is not an edge with the required orientation."""


class NotAClique(PermPatternError):
    """Vertex set does not induce a complete subgraph."""


class IsolatedVertex(PermPatternError):
    """Graph has isolated vertices where they are not allowed."""


class NotEquivalent(PermPatternError):
    """Instances belong to different equivalence classes."""


class MalformedCertificate(PermPatternError):
    """Certificate does not map separating runs onto separating runs."""


class BudgetExhausted(PermPatternError):
    """Search hit its node limit before reaching a definite answer."""

    def __init__(self, msg: str, nodes_explored: int = 0) -> None:
        """Keep explored node count for reporting."""
        super().__init__(msg)
        self.nodes_explored = nodes_explored
