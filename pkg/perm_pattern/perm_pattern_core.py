"""Perm Pattern core module.

Permutations, runs, subsequences and certificate checking. Positions and
values are 1-indexed: a permutation of size n is a bijection from [n] to
[n] stored as its vector representation.
"""
from __future__ import annotations
import bisect
from collections import namedtuple
from typing import Iterable, Iterator, List, Sequence, Set, Tuple

from .perm_pattern_errors import (
    NotABijection,
    LengthMismatch,
    IndexOutOfRange,
)

INCREASING = 'increasing'
DECREASING = 'decreasing'

# Maximal monotonic consecutive subsequence starting at position start.
Run = namedtuple('Run', 'start length direction')

# Strictly increasing positions of pi certifying a pattern.
Certificate = Tuple[int, ...]


class Permutation:
    """Immutable permutation of [n] in vector representation.

    pi(i) returns the entry at position i (1-indexed), pi[k] indexes the
    underlying tuple (0-indexed) like any other sequence.
    """

    __slots__ = ('_values',)

    def __init__(self, values: Iterable[int] = (), check: bool = True):
        """Store values, validating them unless check is disabled."""
        self._values = tuple(values)
        if check:
            _check_bijection(self._values)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        """Return identity permutation of size n."""
        return cls(range(1, n + 1), check=False)

    @property
    def values(self) -> Tuple[int, ...]:
        """Return vector representation."""
        return self._values

    def __call__(self, position: int) -> int:
        """Return the entry at 1-indexed position."""
        if not 1 <= position <= len(self._values):
            raise IndexOutOfRange(
                "Position %s outside [1, %s]" % (position, len(self._values)))
        return self._values[position - 1]

    def __getitem__(self, idx):
        return self._values[idx]

    def __len__(self) -> int:
        return len(self._values)

    def __iter__(self) -> Iterator[int]:
        return iter(self._values)

    def __eq__(self, other) -> bool:
        if isinstance(other, Permutation):
            return self._values == other._values
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._values)

    def __repr__(self) -> str:
        return 'Permutation(%s)' % (self._values,)

    def __str__(self) -> str:
        return ' '.join(str(v) for v in self._values)


def _check_bijection(values: Sequence[int]) -> None:
    n = len(values)
    seen = [False] * (n + 1)
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool):
            raise NotABijection("Value %r is not an integer" % (v,))
        if not 1 <= v <= n:
            raise NotABijection(
                "Value %s is out of range [1, %s]" % (v, n))
        if seen[v]:
            raise NotABijection("Value %s appears more than once" % v)
        seen[v] = True


def make_permutation(values: Iterable[int]) -> Permutation:
    """Return permutation if values form a bijection on [1, n].

    Raises:
        NotABijection: duplicate, missing or out of range value.
    """
    return Permutation(values)


def is_certificate(
        sigma: Permutation, pi: Permutation, phi: Sequence[int]) -> bool:
    """Check if phi certifies sigma as a pattern of pi.

    phi must be strictly increasing and preserve relative order of
    values: sigma(x) < sigma(y) iff pi(phi(x)) < pi(phi(y)).

    Raises:
        LengthMismatch: len(phi) differs from len(sigma).
    """
    if len(phi) != len(sigma):
        raise LengthMismatch(
            "Certificate has %s positions, pattern has %s entries" % (
                len(phi), len(sigma)))
    n = len(pi)
    prev = 0
    for p in phi:
        if not 1 <= p <= n or p <= prev:
            return False
        prev = p
    # Order isomorphism holds iff positions sorted by sigma value have
    # increasing text values.
    by_value = sorted(range(len(sigma)), key=sigma.values.__getitem__)
    mapped = [pi.values[phi[x] - 1] for x in by_value]
    return all(a < b for a, b in zip(mapped, mapped[1:]))


def runs(pi: Permutation) -> List[Run]:
    """Return maximal runs of pi from left to right.

    Consecutive runs share their boundary position, e.g. (4, 5, 3, 1, 2)
    gives runs at positions 1..2, 2..4 and 4..5. A permutation of size 1
    is a single increasing run.
    """
    n = len(pi)
    if n == 0:
        raise IndexOutOfRange("Runs are undefined for empty permutation")
    if n == 1:
        return [Run(1, 1, INCREASING)]
    values = pi.values
    result = []
    start = 0
    up = values[1] > values[0]
    for i in range(1, n - 1):
        next_up = values[i + 1] > values[i]
        if next_up != up:
            result.append(
                Run(start + 1, i - start + 1, INCREASING if up else DECREASING))
            start = i
            up = next_up
    result.append(
        Run(start + 1, n - start, INCREASING if up else DECREASING))
    return result


def pattern_of_indices(pi: Permutation, indices: Sequence[int]) -> Permutation:
    """Return the permutation order-isomorphic to pi restricted to indices.

    Raises:
        IndexOutOfRange: index outside [1, len(pi)] or not strictly
            increasing.
    """
    prev = 0
    for i in indices:
        if not 1 <= i <= len(pi) or i <= prev:
            raise IndexOutOfRange(
                "Indices must be strictly increasing within [1, %s]: %s" % (
                    len(pi), tuple(indices)))
        prev = i
    sub = [pi.values[i - 1] for i in indices]
    ranks = {v: r for r, v in enumerate(sorted(sub), start=1)}
    return Permutation((ranks[v] for v in sub), check=False)


def direct_sum(a: Permutation, b: Permutation) -> Permutation:
    """Return a followed by b shifted up by len(a)."""
    shift = len(a)
    return Permutation(
        a.values + tuple(v + shift for v in b.values), check=False)


def entries(pi: Permutation, i: int, j: int) -> Set[int]:
    """Return set of entries at positions [i, j] (empty if i > j)."""
    if i > j:
        return set()
    if i < 1 or j > len(pi):
        raise IndexOutOfRange(
            "Interval [%s, %s] outside [1, %s]" % (i, j, len(pi)))
    return set(pi.values[i - 1:j])


def matrix_entries(pi: Permutation) -> List[Tuple[int, int]]:
    """Return 1-entries of permutation matrix as (value, position)."""
    return [(v, i) for i, v in enumerate(pi.values, start=1)]


def rectangle_count(
    pi: Permutation,
    positions: Tuple[int, int],
        values: Tuple[int, int]) -> int:
    """Count entries with position and value in closed intervals.

    Empty intervals (start > end) count nothing.
    """
    p_start, p_end = max(positions[0], 1), min(positions[1], len(pi))
    v_start, v_end = values
    if p_start > p_end or v_start > v_end:
        return 0
    return sum(
        1 for v in pi.values[p_start - 1:p_end] if v_start <= v <= v_end)


def _reach(values: Sequence[int]) -> List[int]:
    # Longest subsequence starting at each index whose values decrease,
    # computed right to left with patience sorting tails.
    tails: List[int] = []
    res = [0] * len(values)
    for i in range(len(values) - 1, -1, -1):
        v = values[i]
        k = bisect.bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
        else:
            tails[k] = v
        res[i] = k + 1
    return res


def decreasing_reach(pi: Permutation) -> List[int]:
    """Return longest decreasing subsequence length starting at each position.

    Result is 0-indexed: item k belongs to position k + 1.
    """
    return _reach(pi.values)


def increasing_reach(pi: Permutation) -> List[int]:
    """Return longest increasing subsequence length starting at each position.

    Result is 0-indexed: item k belongs to position k + 1.
    """
    return _reach([-v for v in pi.values])
