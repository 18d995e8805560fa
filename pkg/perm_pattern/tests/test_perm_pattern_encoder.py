import sys

from perm_pattern.perm_pattern_core import (
    direct_sum,
    make_permutation,
    rectangle_count,
)
from perm_pattern.perm_pattern_encoder import (
    Graph,
    VertexOrdering,
    complete_graph,
    component_order,
    disjoint_union,
    edge_indicator,
    ell,
    encode,
    encoding_values,
    layout,
    neighborhood_stats,
    separating_runs,
    MAX_ENCODING_LENGTH,
)
from perm_pattern.perm_pattern_errors import (
    NotAnEdge,
    NotASimpleGraph,
    PermPatternError,
    ScaleExceeded,
)
from perm_pattern import perm_pattern_oracle as oracle
from . import common


class TestPermPatternEncoder(common.PermPatternCommon):
    """Class to test graph encoding into permutations."""

    def _random_corpus(self, count=200, max_n=10, max_z=8):
        # Every graph is encoded with every z in 1..max_z.
        for _ in range(count):
            g = oracle.random_graph(self.rng.randint(1, max_n), self.rng)
            for z in range(1, max_z + 1):
                yield g, z

    def test_01_graph(self):
        """Validate graphs.

        Case 1: edges are normalized to u < v.
        Case 2: self-loop, duplicate edge and unknown vertex.
        """
        # Case 1.
        g = Graph(3, [(2, 1), (3, 2)])
        self.assertEqual(g.edges, frozenset({(1, 2), (2, 3)}))
        self.assertTrue(g.has_edge(2, 1))
        self.assertEqual(g.neighbors(2), frozenset({1, 3}))
        # Case 2.
        with self.assertRaises(NotASimpleGraph):
            Graph(3, [(1, 1)])
        with self.assertRaises(NotASimpleGraph):
            Graph(3, [(1, 2), (2, 1)])
        with self.assertRaises(NotASimpleGraph):
            Graph(3, [(1, 4)])

    def test_02_component_order(self):
        """Order vertices with components consecutive.

        Case 1: connected graph keeps identity.
        Case 2: components {1, 3} and {2, 4}.
        Case 3: disjoint union keeps each part consecutive.
        """
        # Case 1.
        self.assertEqual(
            component_order(common.FIGURE_GRAPH),
            VertexOrdering((1, 2, 3, 4)))
        # Case 2.
        ordering = component_order(Graph(4, [(1, 3), (2, 4)]))
        self.assertEqual(ordering.labels, (1, 3, 2, 4))
        self.assertEqual(
            [ordering.rank(v) for v in (1, 3, 2, 4)], [1, 2, 3, 4])
        self.assertEqual(ordering.label(3), 2)
        # Case 3.
        g = disjoint_union([common.PATH_4, Graph(3, [(1, 3), (2, 3)])])
        self.assertEqual(component_order(g).labels, tuple(range(1, 8)))

    def test_03_neighborhood_stats(self):
        """Split neighbours by ordering rank.

        Case 1: vertex 2 of figure graph.
        Case 2: vertex 4 of figure graph.
        Case 3: isolated vertex.
        """
        g = common.FIGURE_GRAPH
        ordering = component_order(g)
        # Case 1.
        stats = neighborhood_stats(g, ordering, 2)
        self.assertEqual(stats.n_plus, {3, 4})
        self.assertEqual(stats.n_minus, {1})
        self.assertEqual((stats.deg_plus, stats.deg_minus), (2, 1))
        # Case 2.
        stats = neighborhood_stats(g, ordering, 4)
        self.assertEqual(stats.n_plus, set())
        self.assertEqual(stats.n_minus, {2, 3})
        # Case 3.
        g = Graph(3, [(1, 2)])
        stats = neighborhood_stats(g, component_order(g), 3)
        self.assertEqual(stats, (set(), set(), 0, 0))

    def test_04_ell(self):
        """Count earlier neighbours of edge target.

        Case 1: ell(2, 4) = 0, ell(3, 4) = 1, ell(1, 2) = 0.
        Case 2: non-edge or wrong orientation.
        """
        g = common.FIGURE_GRAPH
        ordering = component_order(g)
        # Case 1.
        self.assertEqual(ell(g, ordering, 2, 4), 0)
        self.assertEqual(ell(g, ordering, 3, 4), 1)
        self.assertEqual(ell(g, ordering, 1, 2), 0)
        # Case 2.
        with self.assertRaises(NotAnEdge):
            ell(g, ordering, 1, 3)
        with self.assertRaises(NotAnEdge):
            ell(g, ordering, 4, 3)

    def test_05_layout(self):
        """Compute position/value ledger of figure graph with z = 3.

        Case 1: positions.
        Case 2: values.
        Case 3: derived accessors.
        Case 4: separating runs and encoding values.
        """
        lay = layout(common.FIGURE_GRAPH, 3)
        rec = [lay.record(v) for v in (1, 2, 3, 4)]
        # Case 1.
        self.assertEqual(
            [(r.p_l, r.p_m, r.p_r) for r in rec],
            [(1, 4, 5), (8, 11, 13), (16, 19, 20), (23, 26, 26)])
        # Case 2.
        self.assertEqual(
            [(r.q_l, r.q_m, r.q_r) for r in rec],
            [(6, 4, 3), (13, 10, 9), (20, 17, 16), (28, 24, 23)])
        self.assertEqual(lay.length, 28)
        # Case 3.
        self.assertEqual(lay.left_middle(4), 24)
        self.assertEqual(lay.right_middle(4), 27)
        self.assertEqual(lay.encoding_block(2), (11, 12))
        self.assertEqual(lay.encoding_block(4), (26, 25))
        # Case 4.
        self.assertEqual(separating_runs(lay, 2), ((8, 10), (13, 15)))
        self.assertEqual(encoding_values(lay, 4), (24, 25))
        self.assertEqual(encoding_values(lay, 1), (4, 3))

    def test_06_layout(self):
        """Reject bad sizes.

        Case 1: z below 1.
        Case 2: graph without vertices.
        Case 3: length beyond 32-bit integers.
        """
        # Case 1.
        with self.assertRaises(PermPatternError):
            layout(common.FIGURE_GRAPH, 0)
        # Case 2.
        with self.assertRaises(PermPatternError):
            encode(Graph(0), 3)
        # Case 3.
        with self.assertRaises(ScaleExceeded):
            encode(Graph(1), sys.maxsize)
        with self.assertRaises(ScaleExceeded):
            layout(Graph(1), 2 ** 30)
        with self.assertRaises(ScaleExceeded):
            encode(Graph(2, [(1, 2)]), MAX_ENCODING_LENGTH // 4 + 1)

    def test_07_encode(self):
        """Encode known graphs.

        Case 1: figure graph with z = 3.
        Case 2: triangle with z = 1.
        Case 3: single vertex with z = 2.
        """
        # Case 1.
        pi, lay = encode(common.FIGURE_GRAPH, 3)
        self.assertEqual(pi, common.FIGURE_PI_Z3)
        self.assertEqual(lay, layout(common.FIGURE_GRAPH, 3))
        # Case 2.
        self.assertEqual(encode(common.TRIANGLE, 1)[0], common.TRIANGLE_PI_Z1)
        # Case 3.
        self.assertEqual(
            encode(complete_graph(1), 2)[0], make_permutation([4, 3, 2, 1]))

    def test_08_edge_indicator(self):
        """Read edges back from encoded figure graph.

        Case 1: {1, 2} is an edge.
        Case 2: {1, 3} is not.
        Case 3: {3, 4} is an edge, call is symmetric.
        """
        pi, lay = encode(common.FIGURE_GRAPH, 3)
        # Case 1.
        self.assertTrue(edge_indicator(pi, lay, 1, 2))
        # Case 2.
        self.assertFalse(edge_indicator(pi, lay, 1, 3))
        # Case 3.
        self.assertTrue(edge_indicator(pi, lay, 3, 4))
        self.assertTrue(edge_indicator(pi, lay, 4, 3))

    def test_09_encode(self):
        """Encoding is a permutation of length 2zn + |E|."""
        for g, z in self._random_corpus():
            pi, lay = encode(g, z)
            self.assertEqual(len(pi), 2 * z * g.n + len(g.edges))
            self.assertEqual(lay.length, len(pi))
            # Re-validate as bijection.
            make_permutation(pi.values)

    def test_10_edge_indicator(self):
        """Edge indicator equals adjacency, rectangles hold at most one."""
        for g, z in self._random_corpus():
            pi, lay = encode(g, z)
            for i, u in enumerate(lay.vertices):
                for v in lay.vertices[i + 1:]:
                    self.assertEqual(
                        edge_indicator(pi, lay, u, v), g.has_edge(u, v))
                    count = rectangle_count(
                        pi, lay.encoding_block(u), encoding_values(lay, v))
                    self.assertLessEqual(count, 1)

    def test_11_encode(self):
        """Check separating runs and value intervals.

        Case 1: separating runs carry exact decreasing values.
        Case 2: run values and encoding values partition [1, |pi|].
        """
        for g, z in self._random_corpus(count=100):
            pi, lay = encode(g, z)
            seen = []
            for v in lay.vertices:
                rec = lay.record(v)
                (l_start, l_end), (r_start, r_end) = separating_runs(lay, v)
                # Case 1.
                self.assertEqual(
                    pi.values[l_start - 1:l_end],
                    tuple(range(rec.q_l, rec.q_l - z, -1)))
                self.assertEqual(
                    pi.values[r_start - 1:r_end],
                    tuple(range(rec.q_r, rec.q_r - z, -1)))
                seen.extend(range(rec.q_l - z + 1, rec.q_l + 1))
                seen.extend(range(rec.q_r - z + 1, rec.q_r + 1))
                start, end = encoding_values(lay, v)
                self.assertEqual(end - start + 1, rec.deg_minus)
                seen.extend(range(start, end + 1))
            # Case 2.
            self.assertEqual(len(seen), len(set(seen)))
            self.assertEqual(sorted(seen), list(range(1, len(pi) + 1)))

    def test_12_encode(self):
        """Encoding of disjoint union is direct sum of encodings."""
        for _ in range(50):
            g1 = oracle.random_graph(self.rng.randint(1, 6), self.rng)
            g2 = oracle.random_graph(self.rng.randint(1, 6), self.rng)
            z = self.rng.randint(1, 6)
            self.assertEqual(
                encode(disjoint_union([g1, g2]), z)[0],
                direct_sum(encode(g1, z)[0], encode(g2, z)[0]))

    def test_13_encode(self):
        """Later components take only larger values."""
        for _ in range(50):
            g = oracle.random_graph(self.rng.randint(2, 10), self.rng, p=0.2)
            z = self.rng.randint(1, 5)
            pi, lay = encode(g, z)
            spans = []
            for block in oracle.connected_components(g).blocks:
                ranks = sorted(lay.ordering.rank(v) for v in block)
                # Component ranks are consecutive.
                self.assertEqual(ranks, list(range(ranks[0], ranks[-1] + 1)))
                first = lay.records[ranks[0] - 1]
                last = lay.records[ranks[-1] - 1]
                values = pi.values[first.p_l - 1:last.p_r + z - 1]
                spans.append((ranks[0], min(values), max(values)))
            spans.sort()
            for (_, _, prev_max), (_, cur_min, _) in zip(spans, spans[1:]):
                self.assertLess(prev_max, cur_min)
