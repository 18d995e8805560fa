"""Perm Pattern brute-force oracle.

Ground truth used to cross-check the encoder, the reduction and the
matcher. Everything here is exhaustive on purpose and limited to desk
scale.
"""
from __future__ import annotations
import itertools
import math
import random
from collections import namedtuple
from typing import List, Optional, Tuple
import networkx as nx

from .perm_pattern_encoder import Graph
from .perm_pattern_errors import ScaleExceeded

MAX_CLIQUE_N = 20
MAX_CLIQUE_L = 5

CliqueAnswer = namedtuple('CliqueAnswer', 'found witness')
Components = namedtuple('Components', 'blocks largest')


def has_clique(g: Graph, l: int) -> CliqueAnswer:
    """Search l-subsets in lexicographic order for a complete subgraph.

    Returns first witness found (ascending labels), or found=False with
    witness None.

    Raises:
        ScaleExceeded: neither n <= 20 nor l <= 5.
    """
    if g.n > MAX_CLIQUE_N and l > MAX_CLIQUE_L:
        raise ScaleExceeded(
            "Clique oracle supports n <= %s or l <= %s, got n=%s, l=%s" % (
                MAX_CLIQUE_N, MAX_CLIQUE_L, g.n, l))
    if l < 1:
        return CliqueAnswer(True, ())
    for subset in itertools.combinations(g.vertices, l):
        if all(g.has_edge(u, v) for u, v in itertools.combinations(subset, 2)):
            return CliqueAnswer(True, subset)
    return CliqueAnswer(False, None)


def is_clique(g: Graph, vertices) -> bool:
    """Check if vertices are distinct and pairwise adjacent."""
    vertices = list(vertices)
    if len(set(vertices)) != len(vertices):
        return False
    return all(
        g.has_edge(u, v) for u, v in itertools.combinations(vertices, 2))


def connected_components(g: Graph) -> Components:
    """Return component partition and size of largest component.

    Blocks are sorted by smallest label, labels ascending in a block.
    """
    blocks = sorted(
        tuple(sorted(c)) for c in nx.connected_components(g.to_networkx()))
    largest = max((len(b) for b in blocks), default=0)
    return Components(blocks, largest)


def random_graph(
    n: int,
    rng: random.Random,
        p: float = 0.5) -> Graph:
    """Return Erdos-Renyi graph G(n, p) drawn from rng."""
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return Graph(n, edges)


def random_graph_with_clique(
    n: int,
    l: int,
    rng: random.Random,
        p: float = 0.5) -> Tuple[Graph, Optional[Tuple[int, ...]]]:
    """Return random graph with l-subset forced complete, and the subset.

    Subset is None if l > n.
    """
    g = random_graph(n, rng, p=p)
    if l > n:
        return g, None
    clique = tuple(sorted(rng.sample(range(1, n + 1), l)))
    edges = set(g.edges)
    edges.update(itertools.combinations(clique, 2))
    return Graph(n, edges), clique


def catalan(n: int) -> int:
    """Return n-th Catalan number by closed binomial formula."""
    return math.comb(2 * n, n) // (n + 1)


def all_graphs(n: int) -> List[Graph]:
    """Return every labelled simple graph on n vertices."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    return [
        Graph(n, [e for e, keep in zip(pairs, mask) if keep])
        for mask in itertools.product((False, True), repeat=len(pairs))
    ]
