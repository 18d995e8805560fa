"""Perm Pattern matcher.

Decides whether sigma is a pattern of pi by depth-first search over
pattern positions, left to right. Text positions are tried in ascending
order, so the first certificate found is the lexicographically least one.

Pruning rules (all sound, none of them can cut off a certificate):

- value window: the entry placed for pattern position x must lie between
  the images of its value-order neighbours among already placed
  positions, leaving room for every pattern value in between;
- length: enough text positions must remain for the rest of the pattern;
- monotone reach: the longest decreasing (increasing) subsequence of
  sigma starting at x must fit into the one of pi starting at the
  candidate. Encoded graphs consist mostly of long decreasing runs, so
  this rule does most of the work on reduction instances;
- suffix extremes: the smallest (largest) pattern value still to be
  placed after x needs a text entry after the candidate below (above)
  the image of its closest placed neighbour in value order.
"""
from __future__ import annotations
import bisect
import itertools
from collections import namedtuple
from typing import List, Optional

from .perm_pattern_core import (
    Permutation,
    decreasing_reach,
    increasing_reach,
    pattern_of_indices,
)
from .perm_pattern_errors import (
    PermPatternError,
    BudgetExhausted,
    ScaleExceeded,
)

COUNT_MAX_PATTERN = 12
COUNT_MAX_TEXT = 20
ORACLE_MAX_TEXT = 14
AVOIDERS_MAX_N = 10

MatchResult = namedtuple('MatchResult', 'found certificate nodes_explored')


class PatternMatcher:
    """Backtracking search for a certificate of sigma in pi."""

    def __init__(
        self,
        sigma: Permutation,
        pi: Permutation,
            budget: Optional[int] = None) -> None:
        """Precompute pruning tables for sigma and pi.

        Args:
            sigma: pattern, must not be empty.
            pi: text.
            budget: maximum number of search-tree nodes; None means
                unlimited.
        """
        if not len(sigma):
            raise PermPatternError("Pattern must not be empty")
        self.sigma = sigma
        self.pi = pi
        self.budget = budget
        self.nodes_explored = 0
        self._prepare_neighbors()
        self._prepare_suffix_extremes()
        self._dec_sigma = decreasing_reach(sigma)
        self._inc_sigma = increasing_reach(sigma)
        self._dec_pi = decreasing_reach(pi)
        self._inc_pi = increasing_reach(pi)
        self._suffix_min, self._suffix_max = _suffix_extremes(pi.values)

    def _prepare_neighbors(self):
        # For every pattern position x (0-indexed) find the closest lower
        # and higher values among positions before x, and how many values
        # the text must fit strictly inside each gap (plus one).
        sig = self.sigma.values
        length = len(sig)
        placed: List[int] = []
        index_of = {}
        self._lo = []
        self._hi = []
        self._gap_lo = []
        self._gap_hi = []
        for x, v in enumerate(sig):
            k = bisect.bisect_left(placed, v)
            if k:
                lo_val = placed[k - 1]
                self._lo.append(index_of[lo_val])
                self._gap_lo.append(v - lo_val)
            else:
                self._lo.append(-1)
                self._gap_lo.append(v)
            if k < len(placed):
                hi_val = placed[k]
                self._hi.append(index_of[hi_val])
                self._gap_hi.append(hi_val - v)
            else:
                self._hi.append(-1)
                self._gap_hi.append(length + 1 - v)
            placed.insert(k, v)
            index_of[v] = x

    def _prepare_suffix_extremes(self):
        # For every x, the smallest value after x and its closest higher
        # value among positions up to x (and the mirror for the largest).
        sig = self.sigma.values
        length = len(sig)
        self._fmin_anchor = [-1] * length
        self._fmin_gap = [0] * length
        self._fmax_anchor = [-1] * length
        self._fmax_gap = [0] * length
        if length < 2:
            return
        tail_min = [0] * length
        tail_max = [0] * length
        tail_min[-1] = tail_max[-1] = sig[-1]
        for x in range(length - 2, -1, -1):
            tail_min[x] = min(sig[x], tail_min[x + 1])
            tail_max[x] = max(sig[x], tail_max[x + 1])
        placed: List[int] = []
        index_of = {}
        for x in range(length - 1):
            v = sig[x]
            bisect.insort(placed, v)
            index_of[v] = x
            fmin = tail_min[x + 1]
            k = bisect.bisect_left(placed, fmin)
            if k < len(placed):
                self._fmin_anchor[x] = index_of[placed[k]]
                self._fmin_gap[x] = placed[k] - fmin
            fmax = tail_max[x + 1]
            k = bisect.bisect_left(placed, fmax)
            if k:
                self._fmax_anchor[x] = index_of[placed[k - 1]]
                self._fmax_gap[x] = fmax - placed[k - 1]

    def _suffix_fits(self, x: int, c: int, phi: List[int]) -> bool:
        pv = self.pi.values
        anchor = self._fmin_anchor[x]
        if anchor >= 0:
            val = pv[c] if anchor == x else pv[phi[anchor]]
            if self._suffix_min[c + 1] > val - self._fmin_gap[x]:
                return False
        anchor = self._fmax_anchor[x]
        if anchor >= 0:
            val = pv[c] if anchor == x else pv[phi[anchor]]
            if self._suffix_max[c + 1] < val + self._fmax_gap[x]:
                return False
        return True

    def _next_candidate(self, x: int, start: int, phi: List[int]) -> int:
        pv = self.pi.values
        n = len(pv)
        last = n - (len(self.sigma) - x)
        lo = self._lo[x]
        hi = self._hi[x]
        lo_val = pv[phi[lo]] if lo >= 0 else 0
        hi_val = pv[phi[hi]] if hi >= 0 else n + 1
        # Admissible text values form a closed interval.
        v_min = lo_val + self._gap_lo[x]
        v_max = hi_val - self._gap_hi[x]
        if v_min > v_max:
            return -1
        need_dec = self._dec_sigma[x]
        need_inc = self._inc_sigma[x]
        dec_pi = self._dec_pi
        inc_pi = self._inc_pi
        for c in range(start, last + 1):
            if (
                v_min <= pv[c] <= v_max
                and dec_pi[c] >= need_dec
                and inc_pi[c] >= need_inc
                and self._suffix_fits(x, c, phi)
            ):
                return c
        return -1

    def run(self) -> MatchResult:
        """Search for lexicographically least certificate.

        Raises:
            BudgetExhausted: node limit reached before a definite answer.
        """
        length = len(self.sigma)
        if length > len(self.pi):
            return MatchResult(False, None, 0)
        phi = [0] * length
        cursor = [0] * length
        x = 0
        while x >= 0:
            c = self._next_candidate(x, cursor[x], phi)
            if c < 0:
                x -= 1
                continue
            self.nodes_explored += 1
            if self.budget is not None and self.nodes_explored > self.budget:
                raise BudgetExhausted(
                    "Search budget of %s nodes exhausted" % self.budget,
                    nodes_explored=self.budget)
            phi[x] = c
            cursor[x] = c + 1
            x += 1
            if x == length:
                return MatchResult(
                    True, tuple(p + 1 for p in phi), self.nodes_explored)
            cursor[x] = c + 1
        return MatchResult(False, None, self.nodes_explored)


def _suffix_extremes(values):
    # Entry i holds min/max of values[i:]; sentinels past the end.
    n = len(values)
    suffix_min = [n + 1] * (n + 1)
    suffix_max = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_min[i] = min(values[i], suffix_min[i + 1])
        suffix_max[i] = max(values[i], suffix_max[i + 1])
    return suffix_min, suffix_max


def contains_pattern(
    sigma: Permutation,
    pi: Permutation,
        budget: Optional[int] = None) -> MatchResult:
    """Decide whether sigma is a pattern of pi.

    Raises:
        BudgetExhausted: more than budget search-tree nodes needed.
    """
    return PatternMatcher(sigma, pi, budget=budget).run()


def count_occurrences(sigma: Permutation, pi: Permutation) -> int:
    """Count strictly increasing position sequences certifying sigma.

    Raises:
        ScaleExceeded: len(sigma) > 12 or len(pi) > 20.
    """
    if len(sigma) > COUNT_MAX_PATTERN or len(pi) > COUNT_MAX_TEXT:
        raise ScaleExceeded(
            "Occurrence counting supports |sigma| <= %s and |pi| <= %s" % (
                COUNT_MAX_PATTERN, COUNT_MAX_TEXT))
    return sum(
        1
        for idx in itertools.combinations(range(1, len(pi) + 1), len(sigma))
        if pattern_of_indices(pi, idx) == sigma
    )


def contains_pattern_oracle(sigma: Permutation, pi: Permutation) -> bool:
    """Decide pattern containment by plain subsequence enumeration.

    Raises:
        ScaleExceeded: len(pi) > 14.
    """
    if len(pi) > ORACLE_MAX_TEXT:
        raise ScaleExceeded(
            "Naive oracle supports |pi| <= %s" % ORACLE_MAX_TEXT)
    if len(sigma) > len(pi):
        return False
    return any(
        pattern_of_indices(pi, idx) == sigma
        for idx in itertools.combinations(range(1, len(pi) + 1), len(sigma))
    )


def avoiders_count(sigma: Permutation, n: int) -> int:
    """Count permutations of [n] that do not contain sigma.

    Raises:
        ScaleExceeded: n > 10.
    """
    if n > AVOIDERS_MAX_N:
        raise ScaleExceeded(
            "Avoider enumeration supports n <= %s" % AVOIDERS_MAX_N)
    if n < 1:
        raise PermPatternError("n must be positive, got %s" % n)
    return sum(
        1
        for values in itertools.permutations(range(1, n + 1))
        if not contains_pattern(sigma, Permutation(values, check=False)).found
    )
