import os
import random
import tempfile
import unittest

from perm_pattern import perm_pattern_io as pp_io
from perm_pattern.perm_pattern_core import Permutation
from perm_pattern.perm_pattern_encoder import Graph, complete_graph
from perm_pattern.perm_pattern_reduction import strip_isolated
from perm_pattern import perm_pattern_oracle as oracle

LOG_LEVEL = 'ERROR'
SEED = 20240601

# Four vertices, triangle on 2, 3, 4 plus pendant edge {1, 2}.
FIGURE_GRAPH = Graph(4, [(1, 2), (2, 3), (2, 4), (3, 4)])
FIGURE_PI_Z3 = Permutation((
    6, 5, 4, 10, 3, 2, 1, 13, 12, 11, 17, 24, 9, 8, 7, 20, 19, 18, 25, 16,
    15, 14, 28, 27, 26, 23, 22, 21))
TRIANGLE = complete_graph(3)
TRIANGLE_PI_Z1 = Permutation((2, 4, 7, 1, 5, 8, 3, 9, 6))
PATH_4 = Graph(4, [(1, 2), (2, 3), (3, 4)])
CYCLE_4 = Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
STAR_4 = Graph(4, [(1, 2), (1, 3), (1, 4)])
MATCH_BUDGET = 10 ** 8


def random_permutation(n, rng):
    """Return uniformly drawn permutation of size n."""
    values = list(range(1, n + 1))
    rng.shuffle(values)
    return Permutation(values)


def random_graph_without_isolated(max_n, rng, min_n=1):
    """Return random graph with isolated vertices stripped (may be empty)."""
    return strip_isolated(oracle.random_graph(rng.randint(min_n, max_n), rng))


class PermPatternCommon(unittest.TestCase):
    """Common class for perm_pattern tests."""

    def setUp(self):
        """Set up seeded random generator."""
        super().setUp()
        self.rng = random.Random(SEED)


class PermPatternFilesCommon(PermPatternCommon):
    """Common class for tests that need files on disk."""

    def setUp(self):
        """Set up temporary directory for input and output files."""
        super().setUp()
        self.dir_tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        """Remove temporary directory."""
        super().tearDown()
        self.dir_tmp.cleanup()

    def _path(self, name):
        return os.path.join(self.dir_tmp.name, name)

    def _write(self, name, content):
        path = self._path(name)
        pp_io.write_file(path, content)
        return path

    def _write_graph(self, name, g):
        return self._write(name, pp_io.format_graph(g))

    def _write_permutation(self, name, pi):
        return self._write(name, pp_io.format_permutation(pi))
