"""Perm Pattern toolkit commands."""
from __future__ import annotations
import random
from collections import Counter
from typing import List, Optional, Sequence

from . import perm_pattern_base as pp_base
from . import perm_pattern_config as pp_config
from . import perm_pattern_io as pp_io
from . import perm_pattern_oracle as oracle
from .perm_pattern_base import CommandOutcome
from .perm_pattern_core import is_certificate
from .perm_pattern_encoder import encode
from .perm_pattern_errors import (
    BudgetExhausted,
    IsolatedVertex,
    NotEquivalent,
    PermPatternError,
)
from .perm_pattern_matcher import avoiders_count, contains_pattern
from .perm_pattern_reduction import (
    CliqueInstance,
    certificate_from_clique,
    compose,
    equivalence_check,
    equivalence_key,
    extract_clique,
    isolated_vertices,
    reduce_clique,
    strip_isolated,
)

EXHAUSTIVE_MAX_N = 5

# Harness verdicts.
YES = 'yes'
NO = 'no'
EXHAUSTED = 'exhausted'
DISAGREEMENT = 'disagreement'


class PermPatternEncode(pp_base.PermPatternCommand):
    """Class to encode graph into permutation."""

    name = 'encode'

    def check_run(self, z: int = 1, **kwargs):
        """Override to check separator length."""
        res = super().check_run(z=z, **kwargs)
        if z < 1:
            raise PermPatternError("--z must be at least 1, got %s" % z)
        return res

    def run(
        self,
        graph_path: str,
        z: int = 1,
        out: Optional[str] = None,
            **kwargs) -> CommandOutcome:
        """Encode graph file as pi_z(G).

        With out, permutation is written to out and layout to
        out.layout, and only length is printed. Otherwise permutation
        line is printed.
        """
        self.log_call(graph_path, z=z, out=out)
        super().run(z=z, **kwargs)
        g = self.read_graph(graph_path)
        pi, lay = encode(g, z)
        self.logger.notice("Encoded permutation length: %s", len(pi))
        if not out:
            return CommandOutcome(pp_base.EXIT_YES, [str(pi)])
        self.add_write(out, pp_io.format_permutation(pi))
        self.add_write(out + '.layout', pp_io.format_layout(lay))
        self.commands_invoker.run()
        return CommandOutcome(pp_base.EXIT_YES, ['length=%s' % len(pi)])


class PermPatternMatch(pp_base.PermPatternCommand):
    """Class to decide whether pattern occurs in text."""

    name = 'match'
    section = pp_config.MATCH_SECTION

    def run(
        self,
        pattern_path: str,
        text_path: str,
        certificate: bool = False,
        budget: Optional[int] = None,
            **kwargs) -> CommandOutcome:
        """Search pattern in text.

        Exit code is 0 when found (certificate line printed if asked),
        1 when definitely absent and 3 when budget ran out.

        Args:
            pattern_path: pattern permutation file.
            text_path: text permutation file.
            certificate: whether to print certificate positions.
            budget: node limit. Defaults to config match budget.
        """
        if budget is None:
            budget = self.config.section['budget']
        self.log_call(
            pattern_path, text_path, certificate=certificate, budget=budget)
        super().run(**kwargs)
        sigma = self.read_permutation(pattern_path)
        pi = self.read_permutation(text_path)
        if not len(sigma):
            raise PermPatternError("Pattern must not be empty")
        try:
            res = contains_pattern(sigma, pi, budget=budget)
        except BudgetExhausted as e:
            self.logger.warning(
                "Budget exhausted after %s nodes", e.nodes_explored)
            return CommandOutcome(pp_base.EXIT_BUDGET, [])
        self.logger.info("Explored %s nodes", res.nodes_explored)
        if not res.found:
            self.logger.notice("Pattern not found")
            return CommandOutcome(pp_base.EXIT_NO, [])
        self.logger.notice("Pattern found")
        lines = []
        if certificate:
            lines.append(pp_io.format_certificate(res.certificate).rstrip())
        return CommandOutcome(pp_base.EXIT_YES, lines)


class PermPatternReduce(pp_base.PermPatternCommand):
    """Class to reduce clique instance into pattern matching instance."""

    name = 'reduce'

    def check_run(self, l: int = 1, **kwargs):
        """Override to check clique size."""
        res = super().check_run(l=l, **kwargs)
        if l < 1:
            raise PermPatternError("--l must be at least 1, got %s" % l)
        return res

    def run(
        self,
        graph_path: str,
        l: int = 1,
        out: Optional[str] = None,
            **kwargs) -> CommandOutcome:
        """Write instance directory for clique instance (l, G).

        These files will be written to out:
            - pattern.txt: pi_z(K_l)
            - text.txt: pi_z(G)
            - layout.txt: text layout
            - meta.txt: l, z and vertex rank range
        """
        self.log_call(graph_path, l=l, out=out)
        super().run(l=l, **kwargs)
        inst = reduce_clique(CliqueInstance(l, self.read_graph(graph_path)))
        self.logger.notice(
            "Reduced with z=%s: pattern %s, text %s",
            inst.z, len(inst.sigma), len(inst.pi))
        if out:
            self.add_instance_writes(inst, out)
            self.commands_invoker.run()
        return CommandOutcome(pp_base.EXIT_YES, pp_base.format_lengths(inst))


class PermPatternCompose(pp_base.PermPatternCommand):
    """Class to cross-compose equivalent clique instances."""

    name = 'compose'

    def check_run(self, instances: Sequence[CliqueInstance] = (), **kwargs):
        """Override to check equivalence and isolated vertices.

        Reports failed precondition with file name.
        """
        res = super().check_run(**kwargs)
        if not instances:
            raise PermPatternError("At least one graph file is required")
        paths = kwargs.get('graph_paths', ())
        first = instances[0]
        for path, inst in zip(paths, instances):
            if not equivalence_check(first, inst):
                raise NotEquivalent(
                    "%s is not equivalent to %s: (l, |V|) %s != %s" % (
                        path, paths[0], equivalence_key(inst),
                        equivalence_key(first)))
            isolated = isolated_vertices(inst.g)
            if isolated:
                raise IsolatedVertex(
                    "%s has isolated vertices %s" % (path, list(isolated)))
        return res

    def run(
        self,
        graph_paths: Sequence[str],
        l: int = 1,
        out: Optional[str] = None,
            **kwargs) -> CommandOutcome:
        """Write composed instance directory for graph files.

        Graphs are joined in given order, every one forming a
        consecutive vertex rank range recorded in meta.txt.
        """
        self.log_call(*graph_paths, l=l, out=out)
        instances = [
            CliqueInstance(l, self.read_graph(p)) for p in graph_paths]
        super().run(instances=instances, graph_paths=graph_paths, **kwargs)
        inst = compose(instances)
        self.logger.notice(
            "Composed %s instances with z=%s: pattern %s, text %s",
            len(instances), inst.z, len(inst.sigma), len(inst.pi))
        if out:
            self.add_instance_writes(inst, out)
            self.commands_invoker.run()
        return CommandOutcome(pp_base.EXIT_YES, pp_base.format_lengths(inst))


class PermPatternExtract(pp_base.PermPatternCommand):
    """Class to extract clique from certificate of reduced instance."""

    name = 'extract'

    def run(
        self,
        instance_dir: str,
        certificate_path: str,
            **kwargs) -> CommandOutcome:
        """Print clique (original labels) induced by certificate."""
        self.log_call(instance_dir, certificate_path)
        super().run(**kwargs)
        inst = pp_io.read_instance(instance_dir)
        phi = pp_io.read_certificate(pp_io.read_file(certificate_path))
        clique = sorted(extract_clique(inst, phi))
        self.logger.notice("Extracted clique %s", clique)
        return CommandOutcome(
            pp_base.EXIT_YES, [' '.join(str(v) for v in clique)])


class PermPatternCountAvoiders(pp_base.PermPatternCommand):
    """Class to count permutations avoiding a pattern."""

    name = 'count-avoiders'

    def run(self, pattern: str, n: int, **kwargs) -> CommandOutcome:
        """Print number of permutations of [n] avoiding pattern."""
        self.log_call(pattern=pattern, n=n)
        super().run(**kwargs)
        sigma = pp_io.read_permutation(pattern)
        if not len(sigma):
            raise PermPatternError("Pattern must not be empty")
        return CommandOutcome(
            pp_base.EXIT_YES, [str(avoiders_count(sigma, n))])


class PermPatternVerifyLemma(pp_base.PermPatternCommand):
    """Class to cross-check the Clique reduction against brute force."""

    name = 'verify-lemma'
    section = pp_config.VERIFY_SECTION

    def check_run(self, max_n=1, l=1, samples=0, budget=1, **kwargs):
        """Override to check harness flags."""
        res = super().check_run(**kwargs)
        if max_n < 1 or l < 1 or samples < 0 or budget < 1:
            raise PermPatternError(
                "--max-n, --l and --budget must be positive and --samples"
                " non-negative")
        return res

    def check_graph(self, g, l: int, budget: int) -> str:
        """Return harness verdict for one graph without isolated vertices.

        Compares brute-force clique answer with the matcher on the reduced
        instance. YES answers are checked in both directions: the
        certificate built from the witness must certify the pattern and
        the matcher certificate must map onto a clique.
        """
        answer = oracle.has_clique(g, l)
        inst = reduce_clique(CliqueInstance(l, g))
        if answer.found:
            phi = certificate_from_clique(g, inst.z, answer.witness)
            if not is_certificate(inst.sigma, inst.pi, phi):
                self.logger.warning(
                    "Certificate from clique %s rejected for %s",
                    answer.witness, g)
                return DISAGREEMENT
        try:
            res = contains_pattern(inst.sigma, inst.pi, budget=budget)
        except BudgetExhausted:
            self.logger.warning("Budget exhausted for %s", g)
            return EXHAUSTED
        if res.found != answer.found:
            self.logger.warning(
                "Disagreement for %s: clique %s, pattern %s",
                g, answer.found, res.found)
            return DISAGREEMENT
        if res.found:
            try:
                extract_clique(inst, res.certificate)
            except PermPatternError as e:
                self.logger.warning("Extraction failed for %s: %s", g, e)
                return DISAGREEMENT
            return YES
        return NO

    def _iter_graphs(self, max_n, samples, seed, exhaustive):
        rng = random.Random(seed)
        for _ in range(samples):
            n = rng.randint(1, max_n)
            yield strip_isolated(oracle.random_graph(n, rng))
        if exhaustive and max_n <= EXHAUSTIVE_MAX_N:
            for n in range(1, max_n + 1):
                for g in oracle.all_graphs(n):
                    if not isolated_vertices(g):
                        yield g

    def run(
        self,
        max_n: Optional[int] = None,
        l: Optional[int] = None,
        samples: Optional[int] = None,
        seed: Optional[int] = None,
        budget: Optional[int] = None,
        exhaustive: Optional[bool] = None,
            **kwargs) -> CommandOutcome:
        """Check reduction on random (and optionally all) small graphs.

        Unset arguments default to config verify section. Exit code is 0
        iff no disagreement was found; exhausted budgets are reported but
        are not verdicts.
        """
        cfg = self.config.section
        max_n = cfg['max_n'] if max_n is None else max_n
        l = cfg['l'] if l is None else l
        samples = cfg['samples'] if samples is None else samples
        seed = cfg['seed'] if seed is None else seed
        budget = cfg['budget'] if budget is None else budget
        exhaustive = cfg['exhaustive'] if exhaustive is None else exhaustive
        self.log_call(
            max_n=max_n, l=l, samples=samples, seed=seed, budget=budget,
            exhaustive=exhaustive)
        super().run(
            max_n=max_n, l=l, samples=samples, budget=budget, **kwargs)
        verdicts: Counter = Counter()
        skipped = 0
        for g in self._iter_graphs(max_n, samples, seed, exhaustive):
            if not g.n:
                skipped += 1
                continue
            verdict = self.check_graph(g, l, budget)
            self.logger.info("%s: %s", g, verdict)
            verdicts[verdict] += 1
        lines: List[str] = [
            'checked=%s yes=%s no=%s exhausted=%s disagreements=%s'
            ' skipped=%s' % (
                sum(verdicts.values()), verdicts[YES], verdicts[NO],
                verdicts[EXHAUSTED], verdicts[DISAGREEMENT], skipped)
        ]
        self.logger.notice(lines[0])
        code = pp_base.EXIT_NO if verdicts[DISAGREEMENT] else pp_base.EXIT_YES
        return CommandOutcome(code, lines)
