import contextlib
import io
import os

from perm_pattern import perm_pattern_io as pp_io
from perm_pattern.perm_pattern_cli import main
from perm_pattern.perm_pattern_encoder import Graph
from . import common


class TestPermPatternCommands(common.PermPatternFilesCommon):
    """Class to test perm-pattern commands through command line."""

    def _main(self, *argv):
        stdout, stderr = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(stdout), \
                contextlib.redirect_stderr(stderr):
            code = main(['--log-level', common.LOG_LEVEL] + list(argv))
        return code, stdout.getvalue().splitlines(), stderr.getvalue()

    def test_01_encode(self):
        """Encode graph files.

        Case 1: figure graph with z = 3 printed.
        Case 2: single vertex with z = 2.
        Case 3: output file with layout next to it.
        """
        path = self._write_graph('figure.txt', common.FIGURE_GRAPH)
        # Case 1.
        code, lines, _ = self._main('encode', path, '--z', '3')
        self.assertEqual(code, 0)
        self.assertEqual(lines, [str(common.FIGURE_PI_Z3)])
        # Case 2.
        single = self._write('single.txt', '1 0\n')
        code, lines, _ = self._main('encode', single, '--z', '2')
        self.assertEqual((code, lines), (0, ['4 3 2 1']))
        # Case 3.
        out = self._path('figure.perm')
        code, lines, _ = self._main('encode', path, '--z', '3', '--out', out)
        self.assertEqual((code, lines), (0, ['length=28']))
        text = pp_io.read_file(out)
        self.assertEqual(
            text, pp_io.format_permutation(pp_io.read_permutation(text)))
        self.assertEqual(text, pp_io.format_permutation(common.FIGURE_PI_Z3))
        self.assertEqual(
            pp_io.read_file(out + '.layout').splitlines()[0],
            '1 1 4 5 6 4 3')

    def test_02_encode(self):
        """Report bad input with exit code 2.

        Case 1: self-loop.
        Case 2: z below 1.
        Case 3: missing file.
        Case 4: z too large to encode.
        """
        # Case 1.
        path = self._write('loop.txt', '5 1\n5 5\n')
        code, lines, err = self._main('encode', path)
        self.assertEqual((code, lines), (2, []))
        self.assertIn('perm-pattern: error:', err)
        # Case 2.
        path = self._write_graph('figure.txt', common.FIGURE_GRAPH)
        code, _, _ = self._main('encode', path, '--z', '0')
        self.assertEqual(code, 2)
        # Case 3.
        code, _, _ = self._main('encode', self._path('missing.txt'))
        self.assertEqual(code, 2)
        # Case 4.
        single = self._write('single.txt', '1 0\n')
        code, lines, err = self._main('encode', single, '--z', '1000000000000')
        self.assertEqual((code, lines), (2, []))
        self.assertIn('exceeds', err)

    def test_03_match(self):
        """Match permutation files.

        Case 1: found, certificate printed.
        Case 2: not found.
        Case 3: budget exhausted.
        Case 4: malformed pattern.
        Case 5: budget taken from config file.
        """
        pattern = self._write('pattern.txt', '1 3 2\n')
        text = self._write('text.txt', '2 1 4 3\n')
        # Case 1.
        code, lines, _ = self._main('match', pattern, text, '--certificate')
        self.assertEqual((code, lines), (0, ['1 3 4']))
        code, lines, _ = self._main('match', pattern, text)
        self.assertEqual((code, lines), (0, []))
        # Case 2.
        pattern = self._write('inc.txt', '1 2\n')
        text = self._write('dec.txt', '2 1\n')
        code, lines, _ = self._main('match', pattern, text)
        self.assertEqual((code, lines), (1, []))
        # Case 3.
        pattern = self._write('inc3.txt', '1 2 3\n')
        text = self._write('hard.txt', '3 2 1 4 5 6\n')
        code, _, _ = self._main('match', pattern, text, '--budget', '1')
        self.assertEqual(code, 3)
        # Case 4.
        bad = self._write('bad.txt', '1 1\n')
        code, _, _ = self._main('match', bad, text)
        self.assertEqual(code, 2)
        # Case 5.
        config = self._write('cfg.ini', '[match]\nbudget = 1\n')
        code, _, _ = self._main('--config', config, 'match', pattern, text)
        self.assertEqual(code, 3)

    def test_04_reduce(self):
        """Reduce, match and extract through instance directory.

        Case 1: summary line and instance files.
        Case 2: match pattern in text.
        Case 3: extract clique from certificate.
        Case 4: graph with isolated vertex.
        """
        path = self._write_graph('figure.txt', common.FIGURE_GRAPH)
        out = self._path('instance')
        # Case 1.
        code, lines, _ = self._main('reduce', path, '--l', '3', '--out', out)
        self.assertEqual((code, lines), (0, ['z=20 |sigma|=123 |pi|=164']))
        for name in (
            pp_io.PATTERN_FILE,
            pp_io.TEXT_FILE,
            pp_io.LAYOUT_FILE,
            pp_io.META_FILE,
        ):
            self.assertTrue(os.path.isfile(os.path.join(out, name)))
        # Case 2.
        code, lines, _ = self._main(
            'match',
            os.path.join(out, pp_io.PATTERN_FILE),
            os.path.join(out, pp_io.TEXT_FILE),
            '--certificate')
        self.assertEqual(code, 0)
        self.assertEqual(len(lines[0].split()), 123)
        # Case 3.
        cert = self._write('cert.txt', lines[0] + '\n')
        code, lines, _ = self._main('extract', out, cert)
        self.assertEqual((code, lines), (0, ['2 3 4']))
        # Case 4.
        isolated = self._write_graph(
            'isolated.txt', Graph(5, common.FIGURE_GRAPH.edges))
        code, _, err = self._main('reduce', isolated, '--l', '3')
        self.assertEqual(code, 2)
        self.assertIn('isolated', err)

    def test_05_extract(self):
        """Reject certificate that does not certify pattern."""
        path = self._write_graph('figure.txt', common.FIGURE_GRAPH)
        out = self._path('instance')
        self._main('reduce', path, '--l', '3', '--out', out)
        cert = self._write(
            'cert.txt', ' '.join(str(p) for p in range(1, 124)) + '\n')
        code, lines, _ = self._main('extract', out, cert)
        self.assertEqual((code, lines), (2, []))

    def test_06_compose(self):
        """Compose graph files.

        Case 1: two copies of figure graph.
        Case 2: inputs of different size.
        """
        path = self._write_graph('figure.txt', common.FIGURE_GRAPH)
        out = self._path('composed')
        # Case 1.
        code, lines, _ = self._main(
            'compose', '--l', '3', path, path, '--out', out)
        self.assertEqual((code, lines), (0, ['z=20 |sigma|=123 |pi|=328']))
        self.assertEqual(
            pp_io.read_file(os.path.join(out, pp_io.META_FILE)),
            'l=3 z=20 t=2\nrange 1 1 4\nrange 2 5 8\n')
        # Case 2.
        triangle = self._write_graph('triangle.txt', common.TRIANGLE)
        code, _, err = self._main('compose', '--l', '3', path, triangle)
        self.assertEqual(code, 2)
        self.assertIn('triangle.txt', err)

    def test_07_verify_lemma(self):
        """Cross-check reduction on small graphs.

        Case 1: random graphs.
        Case 2: all graphs up to three vertices.
        Case 3: tiny budget reports exhausted checks, not disagreements.
        """
        # Case 1.
        code, lines, _ = self._main(
            'verify-lemma', '--max-n', '4', '--l', '3', '--samples', '50',
            '--seed', '7')
        self.assertEqual(code, 0)
        self.assertIn('disagreements=0', lines[0])
        self.assertTrue(lines[0].startswith('checked='))
        # Case 2.
        code, lines, _ = self._main(
            'verify-lemma', '--max-n', '3', '--l', '2', '--samples', '0',
            '--exhaustive')
        self.assertEqual(code, 0)
        # Graphs on 2 and 3 vertices without isolated vertices.
        self.assertEqual(
            lines, ['checked=5 yes=5 no=0 exhausted=0 disagreements=0'
                    ' skipped=0'])
        # Case 3.
        code, lines, _ = self._main(
            'verify-lemma', '--max-n', '4', '--samples', '10', '--budget', '1')
        self.assertEqual(code, 0)
        self.assertIn('disagreements=0', lines[0])

    def test_08_count_avoiders(self):
        """Count avoiders.

        Case 1: known counts.
        Case 2: size limit.
        """
        # Case 1.
        for pattern, n, expected in (
            ('2 3 1', 4, '14'),
            ('1', 3, '0'),
            ('1 2', 3, '1'),
        ):
            code, lines, _ = self._main(
                'count-avoiders', '--pattern', pattern, '--n', str(n))
            self.assertEqual((code, lines), (0, [expected]))
        # Case 2.
        code, _, _ = self._main('count-avoiders', '--pattern', '1 2', '--n', '11')
        self.assertEqual(code, 2)

    def test_09_usage(self):
        """Report usage errors with exit code 2."""
        self.assertEqual(self._main()[0], 2)
        path = self._write_graph('figure.txt', common.FIGURE_GRAPH)
        self.assertEqual(self._main('reduce', path)[0], 2)
        self.assertEqual(self._main('encode', path, '--z', 'x')[0], 2)
        missing = self._path('missing.ini')
        self.assertEqual(self._main('--config', missing, 'encode', path)[0], 2)
