"""Perm Pattern graph encoder.

Builds the encoding permutation pi_z(G) of a graph: every vertex gets a
left separating run, a block of encoding entries (one per right-neighbour)
and a right separating run. Separating runs are decreasing runs of length
z. Vertices are laid out in a total order that keeps every connected
component consecutive.

Internally everything is computed over ordering ranks (1..n); public
accessors take and return original vertex labels.
"""
from __future__ import annotations
from collections import namedtuple
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple
import networkx as nx

from .perm_pattern_core import Permutation, rectangle_count
from .perm_pattern_errors import (
    PermPatternError,
    NotASimpleGraph,
    NotAnEdge,
    ScaleExceeded,
)

# Largest encoding length: values must fit signed 32-bit integers.
MAX_ENCODING_LENGTH = 2 ** 31 - 1

# Positions and values of a vertex segment plus its left/right degree.
VertexRecord = namedtuple(
    'VertexRecord', 'p_l p_m p_r q_l q_m q_r deg_plus deg_minus')

NeighborhoodStats = namedtuple(
    'NeighborhoodStats', 'n_plus n_minus deg_plus deg_minus')


class Graph:
    """Simple undirected graph on vertices 1..n."""

    __slots__ = ('_n', '_edges', '_adjacency')

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = ()):
        """Validate and store vertex count and edges.

        Edges may be given in any orientation, they are stored as (u, v)
        with u < v.

        Raises:
            NotASimpleGraph: self-loop, duplicate edge or vertex outside
                [1, n].
        """
        if n < 0:
            raise NotASimpleGraph("Vertex count must not be negative: %s" % n)
        normalized = set()
        adjacency: Dict[int, Set[int]] = {v: set() for v in range(1, n + 1)}
        for u, v in edges:
            if u == v:
                raise NotASimpleGraph("Self-loop on vertex %s" % u)
            if not (1 <= u <= n and 1 <= v <= n):
                raise NotASimpleGraph(
                    "Edge {%s, %s} has vertex outside [1, %s]" % (u, v, n))
            edge = (min(u, v), max(u, v))
            if edge in normalized:
                raise NotASimpleGraph("Duplicate edge {%s, %s}" % edge)
            normalized.add(edge)
            adjacency[u].add(v)
            adjacency[v].add(u)
        self._n = n
        self._edges = frozenset(normalized)
        self._adjacency = {v: frozenset(a) for v, a in adjacency.items()}

    @property
    def n(self) -> int:
        """Return vertex count."""
        return self._n

    @property
    def edges(self) -> FrozenSet[Tuple[int, int]]:
        """Return edges as (u, v) pairs with u < v."""
        return self._edges

    @property
    def vertices(self) -> range:
        """Return vertex labels."""
        return range(1, self._n + 1)

    def neighbors(self, v: int) -> FrozenSet[int]:
        """Return neighbours of v."""
        return self._adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        """Check if {u, v} is an edge."""
        return (min(u, v), max(u, v)) in self._edges

    def to_networkx(self) -> nx.Graph:
        """Return graph as networkx graph."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self._edges)
        return graph

    def __eq__(self, other) -> bool:
        if isinstance(other, Graph):
            return self._n == other._n and self._edges == other._edges
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return 'Graph(%s, %s)' % (self._n, sorted(self._edges))


def complete_graph(l: int) -> Graph:
    """Return clique K_l on vertices 1..l."""
    return Graph(
        l, ((u, v) for u in range(1, l + 1) for v in range(u + 1, l + 1)))


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Return disjoint union, shifting labels of each graph after previous."""
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


class VertexOrdering:
    """Bijection between original vertex labels and ranks 1..n."""

    __slots__ = ('_labels', '_ranks')

    def __init__(self, labels: Sequence[int]):
        """Store labels listed in rank order."""
        self._labels = tuple(labels)
        self._ranks = {v: r for r, v in enumerate(self._labels, start=1)}

    @property
    def labels(self) -> Tuple[int, ...]:
        """Return original labels in rank order."""
        return self._labels

    def rank(self, v: int) -> int:
        """Return rank of original label v."""
        return self._ranks[v]

    def label(self, rank: int) -> int:
        """Return original label with given rank."""
        return self._labels[rank - 1]

    def __len__(self) -> int:
        return len(self._labels)

    def __eq__(self, other) -> bool:
        if isinstance(other, VertexOrdering):
            return self._labels == other._labels
        return NotImplemented

    def __repr__(self) -> str:
        return 'VertexOrdering(%s)' % (self._labels,)


def component_order(g: Graph) -> VertexOrdering:
    """Return ordering placing each connected component consecutively.

    Components are sorted by their smallest label, vertices inside a
    component ascending.
    """
    components = sorted(
        sorted(c) for c in nx.connected_components(g.to_networkx()))
    return VertexOrdering([v for c in components for v in c])


def neighborhood_stats(
        g: Graph, ordering: VertexOrdering, v: int) -> NeighborhoodStats:
    """Return right/left neighbours of v (by rank) and their counts."""
    rank = ordering.rank(v)
    n_plus = {u for u in g.neighbors(v) if ordering.rank(u) > rank}
    n_minus = {u for u in g.neighbors(v) if ordering.rank(u) < rank}
    return NeighborhoodStats(n_plus, n_minus, len(n_plus), len(n_minus))


def ell(g: Graph, ordering: VertexOrdering, v: int, u: int) -> int:
    """Count neighbours of u ranked strictly before v.

    Raises:
        NotAnEdge: {v, u} is not an edge or v is not ranked before u.
    """
    if not g.has_edge(v, u) or ordering.rank(v) >= ordering.rank(u):
        raise NotAnEdge(
            "{%s, %s} must be an edge with %s ranked first" % (v, u, v))
    rank = ordering.rank(v)
    return sum(1 for w in g.neighbors(u) if ordering.rank(w) < rank)


class EncodingLayout:
    """Position/value ledger of pi_z(G).

    Records are kept per rank; accessors take original labels.
    """

    def __init__(
        self,
        z: int,
        ordering: VertexOrdering,
            records: Sequence[VertexRecord]) -> None:
        """Store separator length, ordering and per-rank records."""
        self._z = z
        self._ordering = ordering
        self._records = tuple(records)

    @property
    def z(self) -> int:
        """Return separator length."""
        return self._z

    @property
    def ordering(self) -> VertexOrdering:
        """Return vertex ordering."""
        return self._ordering

    @property
    def records(self) -> Tuple[VertexRecord, ...]:
        """Return records in rank order."""
        return self._records

    @property
    def vertices(self) -> Tuple[int, ...]:
        """Return original labels in rank order."""
        return self._ordering.labels

    @property
    def length(self) -> int:
        """Return length of encoded permutation."""
        if not self._records:
            return 0
        return self._records[-1].p_r + self._z - 1

    def record(self, v: int) -> VertexRecord:
        """Return record of original label v."""
        return self._records[self._ordering.rank(v) - 1]

    def encoding_block(self, v: int) -> Tuple[int, int]:
        """Return C(v) as closed position interval (may be empty)."""
        rec = self.record(v)
        return rec.p_m, rec.p_r - 1

    def left_middle(self, v: int) -> int:
        """Return L(v), middle position of left separating run."""
        return self.record(v).p_l + self._z // 2

    def right_middle(self, v: int) -> int:
        """Return R(v), middle position of right separating run."""
        return self.record(v).p_r + self._z // 2

    def __eq__(self, other) -> bool:
        if isinstance(other, EncodingLayout):
            return (
                self._z == other._z
                and self._ordering == other._ordering
                and self._records == other._records
            )
        return NotImplemented


def separating_runs(
        lay: EncodingLayout, v: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Return closed position intervals of left and right separating runs."""
    rec = lay.record(v)
    z = lay.z
    return (rec.p_l, rec.p_l + z - 1), (rec.p_r, rec.p_r + z - 1)


def encoding_values(lay: EncodingLayout, v: int) -> Tuple[int, int]:
    """Return values used to encode edges to left-neighbours of v.

    Interval is empty (start > end) when v has no left-neighbours.
    """
    rec = lay.record(v)
    return rec.q_m, rec.q_m + rec.deg_minus - 1


def _check_size(g: Graph, z: int) -> None:
    if z < 1:
        raise PermPatternError("Separator length z must be >= 1, got %s" % z)
    if g.n < 1:
        raise PermPatternError("Graph must have at least one vertex")
    length = 2 * z * g.n + len(g.edges)
    if length > MAX_ENCODING_LENGTH:
        raise ScaleExceeded(
            "Encoding length 2zn+|E| = %s exceeds %s" % (
                length, MAX_ENCODING_LENGTH))


def _rank_adjacency(
        g: Graph, ordering: VertexOrdering) -> List[Tuple[int, ...]]:
    # Sorted neighbour ranks per rank, index 0 unused.
    adj: List[Tuple[int, ...]] = [()]
    for v in ordering.labels:
        adj.append(tuple(sorted(ordering.rank(u) for u in g.neighbors(v))))
    return adj


def _build_records(
        adj: List[Tuple[int, ...]], z: int) -> List[VertexRecord]:
    records: List[VertexRecord] = []
    p_r_prev = q_l_prev = 0
    for r in range(1, len(adj)):
        deg_plus = sum(1 for u in adj[r] if u > r)
        deg_minus = len(adj[r]) - deg_plus
        if r == 1:
            p_l = 1
            q_r = z
        else:
            p_l = p_r_prev + z
            q_r = q_l_prev + z
        p_m = p_l + z
        p_r = p_m + deg_plus
        q_m = q_r + 1
        q_l = q_m + z + deg_minus - 1
        records.append(
            VertexRecord(p_l, p_m, p_r, q_l, q_m, q_r, deg_plus, deg_minus))
        p_r_prev, q_l_prev = p_r, q_l
    return records


def layout(g: Graph, z: int) -> EncodingLayout:
    """Return position/value ledger of pi_z(g).

    Raises:
        ScaleExceeded: 2zn+|E| exceeds MAX_ENCODING_LENGTH.
    """
    _check_size(g, z)
    ordering = component_order(g)
    return EncodingLayout(
        z, ordering, _build_records(_rank_adjacency(g, ordering), z))


def encode(g: Graph, z: int) -> Tuple[Permutation, EncodingLayout]:
    """Return pi_z(g) with its layout.

    Each vertex v contributes a decreasing run of z values starting at
    q_L(v), one entry q_M(u) + ell(v, u) for every right-neighbour u in
    ascending order, and a decreasing run of z values starting at q_R(v).
    """
    lay = layout(g, z)
    adj = _rank_adjacency(g, lay.ordering)
    values = [0] * lay.length
    for r, rec in enumerate(lay.records, start=1):
        for k in range(z):
            values[rec.p_l - 1 + k] = rec.q_l - k
            values[rec.p_r - 1 + k] = rec.q_r - k
        right = [u for u in adj[r] if u > r]
        for i, u in enumerate(right):
            # Left-neighbours of u ranked before r: r is the next one.
            ell_ru = adj[u].index(r)
            values[rec.p_m - 1 + i] = lay.records[u - 1].q_m + ell_ru
    return Permutation(values), lay


def edge_indicator(
        pi: Permutation, lay: EncodingLayout, u: int, v: int) -> bool:
    """Check if the rectangle C(u) x values of v holds exactly one entry.

    Vertices are taken in ordering ranks, so the call is symmetric in u
    and v.
    """
    if lay.ordering.rank(u) > lay.ordering.rank(v):
        u, v = v, u
    if u == v:
        return False
    return rectangle_count(
        pi, lay.encoding_block(u), encoding_values(lay, v)) == 1
