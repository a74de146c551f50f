"""Multi-indices and the symplectic pairing on basis labels.

A multi-index is a plain, strictly increasing tuple of 1-based labels.  Every
matrix in the package has its rows and columns labelled by such tuples, listed
in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable

MultiIndex = tuple[int, ...]


def multi_index(entries: Iterable[int], ambient: int) -> MultiIndex:
    """Validate ``entries`` as an element of I(d, ambient) and return it as a tuple."""
    t = tuple(int(e) for e in entries)
    if any(a >= b for a, b in zip(t, t[1:])):
        raise ValueError(f"multi-index {t} is not strictly increasing")
    if t and (t[0] < 1 or t[-1] > ambient):
        raise ValueError(f"multi-index {t} has entries outside [1..{ambient}]")
    return t


def enumerate_indices(d: int, m: int) -> list[MultiIndex]:
    """All strictly increasing ``d``-tuples from ``[1..m]``, lexicographically."""
    if d < 0 or d > m:
        raise ValueError(f"need 0 <= d <= m, got d={d}, m={m}")
    return list(combinations(range(1, m + 1), d))


@dataclass(frozen=True)
class SymplecticLabels:
    """Basis labels ``1..2n`` with the pairing ``i <-> 2n+1-i``."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")

    @property
    def ambient(self) -> int:
        return 2 * self.n

    def involution(self, i: int) -> int:
        return 2 * self.n + 1 - i

    def pair_index(self, i: int) -> int:
        return min(i, 2 * self.n + 1 - i)

    def pair(self, j: int) -> tuple[int, int]:
        """The pair P_j = (j, 2n+1-j) for a pair-index ``j`` in ``[1..n]``."""
        if not 1 <= j <= self.n:
            raise ValueError(f"pair index {j} outside [1..{self.n}]")
        return (j, 2 * self.n + 1 - j)

    def pairs(self, m: int | None = None) -> list[tuple[int, int]]:
        """P_1, ..., P_m (all n pairs by default)."""
        m = self.n if m is None else m
        return [self.pair(j) for j in range(1, m + 1)]

    def form(self, i: int, j: int) -> int:
        """Alternating symplectic form on basis vectors: +1 on (i, 2n+1-i) for i <= n."""
        if i + j != 2 * self.n + 1:
            return 0
        return 1 if i <= self.n else -1

    @cached_property
    def row_labels(self) -> list[MultiIndex]:
        return enumerate_indices(self.n - 2, 2 * self.n)

    @cached_property
    def col_labels(self) -> list[MultiIndex]:
        return enumerate_indices(self.n, 2 * self.n)


@dataclass(frozen=True, order=True)
class RowClass:
    """Singleton/pair decomposition of a multi-index.

    Ordering sorts by number of singletons first, so the class without
    singletons comes before everything else.
    """

    size: int
    singletons: MultiIndex
    pair_count: int

    @classmethod
    def of(cls, singletons: MultiIndex, pair_count: int) -> "RowClass":
        return cls(len(singletons), tuple(singletons), pair_count)

    @property
    def key(self) -> MultiIndex:
        return self.singletons


def decompose_row_class(alpha: MultiIndex, labels: SymplecticLabels) -> RowClass:
    support = set(alpha)
    singles = tuple(a for a in alpha if labels.involution(a) not in support)
    pair_count = sum(1 for a in alpha if a <= labels.n and labels.involution(a) in support)
    return RowClass.of(singles, pair_count)


def pair_count(beta: MultiIndex, labels: SymplecticLabels) -> int:
    support = set(beta)
    return sum(1 for a in beta if a <= labels.n and labels.involution(a) in support)


def surviving_pairs(singletons: MultiIndex, labels: SymplecticLabels) -> list[int]:
    """Pair-indices j whose pair P_j is disjoint from ``singletons``."""
    used = {labels.pair_index(a) for a in singletons}
    return [j for j in range(1, labels.n + 1) if j not in used]


def admissible_tuples(t: int, labels: SymplecticLabels) -> list[MultiIndex]:
    """All ``t``-subsets of ``[1..2n]`` that contain no symplectic pair."""
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    if t > labels.n:
        return []
    bound = 2 * labels.n + 1
    out = []
    for c in combinations(range(1, bound), t):
        s = set(c)
        if all(bound - a not in s for a in c):
            out.append(c)
    return out


def q_count(t: int, labels: SymplecticLabels) -> int:
    """Number of pair-free ``t``-subsets: choose t pairs, then one side of each."""
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    return comb(labels.n, t) * 2**t


def class_row_count(s: int, labels: SymplecticLabels) -> int:
    """Rows of I(n-2, 2n) sharing a fixed singleton tuple of size ``s``."""
    free = labels.n - s
    if (labels.n - 2 - s) % 2 or free < 2:
        return 0
    return comb(free, (labels.n - 2 - s) // 2)
