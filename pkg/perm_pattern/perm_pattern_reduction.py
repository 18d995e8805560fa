"""Perm Pattern Clique reduction and cross-composition.

A clique instance (l, G) is turned into the pattern matching instance
"is pi_z(K_l) a pattern of pi_z(G)?" with z = 4n' + 4, n' being the size
of the largest connected component of G. Many equivalent clique
instances compose into one instance over their disjoint union, whose
pattern length does not depend on how many instances were composed.
"""
from __future__ import annotations
import bisect
from collections import namedtuple
from typing import Dict, FrozenSet, Sequence, Tuple

from .perm_pattern_core import (
    Certificate,
    Permutation,
    decreasing_reach,
    is_certificate,
)
from .perm_pattern_encoder import (
    EncodingLayout,
    Graph,
    complete_graph,
    disjoint_union,
    encode,
    layout,
    separating_runs,
)
from .perm_pattern_errors import (
    PermPatternError,
    IsolatedVertex,
    LengthMismatch,
    MalformedCertificate,
    NotAClique,
    NotEquivalent,
)
from . import perm_pattern_oracle as oracle

# Single equivalence class shared by all malformed instances.
MALFORMED = 'malformed'

CliqueInstance = namedtuple('CliqueInstance', 'l g')

ComposedInstance = namedtuple(
    'ComposedInstance',
    'l z sigma pi layout_pattern layout_text input_ranges graph')


def separator_length(n_largest: int) -> int:
    """Return z = 4n' + 4 for largest component size n'."""
    return 4 * n_largest + 4


def pattern_length(l: int, z: int) -> int:
    """Return |pi_z(K_l)| = 2zl + l(l-1)/2."""
    return 2 * z * l + l * (l - 1) // 2


def is_well_formed(inst) -> bool:
    """Check if inst is a clique instance with l >= 1 and a graph."""
    return (
        isinstance(inst, CliqueInstance)
        and isinstance(inst.l, int)
        and not isinstance(inst.l, bool)
        and inst.l >= 1
        and isinstance(inst.g, Graph)
    )


def isolated_vertices(g: Graph) -> Tuple[int, ...]:
    """Return vertices without neighbours."""
    return tuple(v for v in g.vertices if not g.neighbors(v))


def strip_isolated(g: Graph) -> Graph:
    """Remove isolated vertices, relabeling the rest 1..n'' in order."""
    kept = [v for v in g.vertices if g.neighbors(v)]
    relabel = {v: i for i, v in enumerate(kept, start=1)}
    return Graph(
        len(kept), ((relabel[u], relabel[v]) for u, v in g.edges))


def _check_instance(inst: CliqueInstance, idx: int = 1) -> None:
    if not is_well_formed(inst):
        raise PermPatternError("Input %s is not a clique instance" % idx)
    if inst.g.n < 1:
        raise PermPatternError("Input %s graph has no vertices" % idx)
    isolated = isolated_vertices(inst.g)
    if isolated:
        raise IsolatedVertex(
            "Input %s graph has isolated vertices %s; strip them first" % (
                idx, list(isolated)))


def _build_instance(
    l: int,
    graph: Graph,
    z: int,
        input_ranges: Sequence[Tuple[int, int]]) -> ComposedInstance:
    sigma, layout_pattern = encode(complete_graph(l), z)
    pi, layout_text = encode(graph, z)
    return ComposedInstance(
        l=l,
        z=z,
        sigma=sigma,
        pi=pi,
        layout_pattern=layout_pattern,
        layout_text=layout_text,
        input_ranges=tuple(input_ranges),
        graph=graph,
    )


def reduce_clique(inst: CliqueInstance) -> ComposedInstance:
    """Reduce clique instance to pattern matching with z = 4n' + 4.

    Raises:
        IsolatedVertex: graph has isolated vertices.
    """
    _check_instance(inst)
    z = separator_length(oracle.connected_components(inst.g).largest)
    return _build_instance(inst.l, inst.g, z, [(1, inst.g.n)])


def certificate_from_clique(
        g: Graph, z: int, clique) -> Certificate:
    """Return certificate of pi_z(K_l) in pi_z(g) for a clique of g.

    Selects, for every clique vertex in ordering rank, its left
    separating run, the encoding entries of edges to later clique
    members and its right separating run.

    Raises:
        NotAClique: clique has unknown or repeated vertices, or two of
            them are not adjacent.
    """
    members = list(clique)
    if (
        any(v not in g.vertices for v in members)
        or not oracle.is_clique(g, members)
    ):
        raise NotAClique("%s is not a clique of the graph" % sorted(members))
    lay = layout(g, z)
    ordering = lay.ordering
    member_ranks = {ordering.rank(v) for v in members}
    phi = []
    for r in sorted(member_ranks):
        v = ordering.label(r)
        rec = lay.record(v)
        (l_start, l_end), (r_start, r_end) = separating_runs(lay, v)
        phi.extend(range(l_start, l_end + 1))
        right = sorted(
            ordering.rank(u) for u in g.neighbors(v) if ordering.rank(u) > r)
        phi.extend(
            rec.p_m + i for i, u in enumerate(right) if u in member_ranks)
        phi.extend(range(r_start, r_end + 1))
    return tuple(phi)


def _host_vertex(lay: EncodingLayout, position: int, side: str) -> int:
    # Rank whose separating run on given side contains position, or 0.
    starts = [
        rec.p_l if side == 'left' else rec.p_r for rec in lay.records]
    k = bisect.bisect_right(starts, position)
    if k and position <= starts[k - 1] + lay.z - 1:
        return k
    return 0


def vertex_map(inst: ComposedInstance, phi: Certificate) -> Dict[int, int]:
    """Return f_phi mapping pattern vertices to text vertex labels.

    Pattern vertex v goes to the text vertex whose left separating run
    holds phi(L(v)); phi(R(v)) must land in the right separating run of
    the same text vertex.

    Raises:
        LengthMismatch: phi length differs from pattern length.
        MalformedCertificate: phi does not certify the pattern, or the
            middle entries miss the separating runs.
    """
    if len(phi) != len(inst.sigma):
        raise LengthMismatch(
            "Certificate has %s positions, pattern has %s entries" % (
                len(phi), len(inst.sigma)))
    if not is_certificate(inst.sigma, inst.pi, phi):
        raise MalformedCertificate("Positions do not certify the pattern")
    mapping = {}
    text = inst.layout_text
    for v in inst.layout_pattern.vertices:
        left = phi[inst.layout_pattern.left_middle(v) - 1]
        right = phi[inst.layout_pattern.right_middle(v) - 1]
        rank = _host_vertex(text, left, 'left')
        if not rank:
            raise MalformedCertificate(
                "Middle of left run of pattern vertex %s maps to position %s"
                " outside every left separating run" % (v, left))
        if _host_vertex(text, right, 'right') != rank:
            raise MalformedCertificate(
                "Middle of right run of pattern vertex %s maps to position %s"
                " outside right separating run of text vertex %s" % (
                    v, right, text.ordering.label(rank)))
        mapping[v] = text.ordering.label(rank)
    return mapping


def extract_clique(
        inst: ComposedInstance, phi: Certificate) -> FrozenSet[int]:
    """Return the clique of the text graph induced by certificate phi.

    Raises:
        MalformedCertificate: see vertex_map; also raised when the image
            is not an l-clique, which can only happen below z = 4n' + 4.
    """
    image = vertex_map(inst, phi).values()
    clique = frozenset(image)
    if len(clique) != inst.l or not oracle.is_clique(inst.graph, clique):
        raise MalformedCertificate(
            "Certificate maps pattern onto %s, which is not a %s-clique" % (
                sorted(image), inst.l))
    return clique


def equivalence_key(inst):
    """Return (l, |V(G)|) or MALFORMED."""
    if not is_well_formed(inst):
        return MALFORMED
    return inst.l, inst.g.n


def equivalence_check(a, b) -> bool:
    """Check if a and b belong to the same equivalence class."""
    return equivalence_key(a) == equivalence_key(b)


def compose(instances: Sequence[CliqueInstance]) -> ComposedInstance:
    """Compose equivalent clique instances into one OR-instance.

    Text graph is disjoint union of input graphs in given order and
    z = 4|V(G_1)| + 4.

    Raises:
        NotEquivalent: some input is not equivalent to the first one.
        IsolatedVertex: some input graph has isolated vertices.
    """
    if not instances:
        raise PermPatternError("Composition needs at least one instance")
    first = instances[0]
    for idx, inst in enumerate(instances, start=1):
        if not equivalence_check(first, inst):
            raise NotEquivalent(
                "Input %s %s is not equivalent to input 1 %s" % (
                    idx, equivalence_key(inst), equivalence_key(first)))
    for idx, inst in enumerate(instances, start=1):
        _check_instance(inst, idx=idx)
    ranges = []
    offset = 0
    for inst in instances:
        ranges.append((offset + 1, offset + inst.g.n))
        offset += inst.g.n
    graph = disjoint_union([inst.g for inst in instances])
    z = separator_length(first.g.n)
    return _build_instance(first.l, graph, z, ranges)


def parameter_bound(inst: ComposedInstance) -> int:
    """Return |V(G_1)| * 2z + |V(G_1)|^2, the bound on pattern length."""
    start, end = inst.input_ranges[0]
    n_first = end - start + 1
    return n_first * 2 * inst.z + n_first ** 2


def input_of_rank(inst: ComposedInstance, rank: int) -> int:
    """Return 1-based index of the input whose range holds rank, or 0."""
    for idx, (start, end) in enumerate(inst.input_ranges, start=1):
        if start <= rank <= end:
            return idx
    return 0


def encoding_decreasing_bound(inst: ComposedInstance) -> int:
    """Return longest decreasing subsequence of pi avoiding separating runs."""
    text = inst.layout_text
    values = []
    for v in text.vertices:
        start, end = text.encoding_block(v)
        values.extend(inst.pi.values[start - 1:end])
    if not values:
        return 0
    return max(decreasing_reach(Permutation(values, check=False)))
