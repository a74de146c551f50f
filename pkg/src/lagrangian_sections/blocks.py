"""The recursive block matrices A_k^l and L_k, and the inclusion oracle M_m.

``a(k, l)`` follows the stepped construction literally: start from the
element/pair incidence layout ``a0(k)``, put an identity under it, and join
the shrinking family side by side with the identities bottom-aligned.  The
inclusion matrix ``m_matrix(m)`` is built independently from subsets and is
what ``l_matrix(k)`` is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .indexing import MultiIndex, enumerate_indices
from .linalg import BinaryMatrix, permutation_equivalent


def a0(k: int) -> BinaryMatrix:
    """The (k+1) x C(k+1, 2) starting matrix A_k^0."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    rows = [0] * (k + 1)
    offset = 0
    for j in range(k):  # block j (0-based) has width k - j
        width = k - j
        rows[j] |= ((1 << width) - 1) << offset
        for t in range(width):
            rows[j + 1 + t] |= 1 << (offset + t)
        offset += width
    return BinaryMatrix(k + 1, offset, rows)


def with_identity(X: BinaryMatrix, s: int) -> BinaryMatrix:
    """``X`` stacked on top of the identity I_s."""
    if X.n_cols != s:
        raise ValueError(f"identity of size {s} does not match {X.n_cols} columns")
    return BinaryMatrix(X.n_rows + s, s, X.rows + tuple(1 << i for i in range(s)))


def join_bottom(Xs: Sequence[BinaryMatrix]) -> BinaryMatrix:
    """Side-by-side join with bottom rows aligned and zeros above shorter operands."""
    if not Xs:
        return BinaryMatrix.zeros(0, 0)
    height = Xs[0].n_rows
    rows = [0] * height
    offset = 0
    prev = height
    for X in Xs:
        if X.n_rows > prev:
            raise ValueError("operand heights must be weakly decreasing")
        prev = X.n_rows
        top = height - X.n_rows
        for i, r in enumerate(X.rows):
            rows[top + i] |= r << offset
        offset += X.n_cols
    return BinaryMatrix(height, offset, rows)


@lru_cache(maxsize=None)
def a(k: int, level: int) -> BinaryMatrix:
    """A_k^level via the stepped recursion."""
    if k < 1 or level < 0:
        raise ValueError(f"need k >= 1 and level >= 0, got k={k}, level={level}")
    if level == 0:
        return a0(k)
    prev = level - 1
    operands = [with_identity(a(k - j, prev), comb(k + prev + 1 - j, prev + 2)) for j in range(k)]
    return join_bottom(operands)


def l_matrix(k: int) -> BinaryMatrix:
    """L_k = A_k^{k-3}; L_2 is the 1 x 2 all-ones matrix."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if k == 2:
        return BinaryMatrix.ones(1, 2)
    return a(k, k - 3)


def inclusion_matrix(t: int, s: int, v: int) -> BinaryMatrix:
    """Rows: t-subsets of [1..v]; columns: s-subsets; entry 1 iff row is contained in column."""
    row_labels = enumerate_indices(t, v)
    col_labels = enumerate_indices(s, v)
    col_pos = {c: j for j, c in enumerate(col_labels)}
    rows = []
    extra = s - t
    for A in row_labels:
        rest = [i for i in range(1, v + 1) if i not in A]
        x = 0
        for ext in combinations(rest, extra):
            x |= 1 << col_pos[tuple(sorted(A + ext))]
        rows.append(x)
    return BinaryMatrix(len(rows), len(col_labels), rows, row_labels, col_labels)


@lru_cache(maxsize=None)
def m_matrix(m: int) -> BinaryMatrix:
    """Inclusion of ((m-2)/2)-subsets in (m/2)-subsets of [1..m], lexicographic labels."""
    if m < 2 or m % 2:
        raise ValueError(f"m must be an even integer >= 2, got {m}")
    return inclusion_matrix((m - 2) // 2, m // 2, m)


def phi(subsets: Sequence[MultiIndex], m: int) -> BinaryMatrix:
    """Rows of M_m for the given pair-index subsets, restricted to the columns they touch."""
    if m % 2:
        raise ValueError(f"m must be even, got {m}")
    cols = sorted(
        {tuple(sorted(A + (i,))) for A in subsets for i in range(1, m + 1) if i not in A}
    )
    col_pos = {c: j for j, c in enumerate(cols)}
    rows = []
    for A in subsets:
        x = 0
        for i in range(1, m + 1):
            if i not in A:
                x |= 1 << col_pos[tuple(sorted(A + (i,)))]
        rows.append(x)
    return BinaryMatrix(len(rows), len(cols), rows, list(subsets), cols)


@dataclass(frozen=True)
class Triangle:
    """Prefix of pair-indices together with every 2-element completion after it."""

    prefix: MultiIndex
    members: tuple[MultiIndex, ...]

    def __len__(self):
        return len(self.members)


def triangles(m: int) -> list[Triangle]:
    """The triangles T_alpha covering all ((m-2)/2)-subsets of the m pairs.

    Prefixes run over I((m-6)/2, m-2) in lexicographic order.
    """
    if m < 6 or m % 2:
        raise ValueError(f"m must be an even integer >= 6, got {m}")
    out = []
    for prefix in enumerate_indices((m - 6) // 2, m - 2):
        start = prefix[-1] if prefix else 0
        members = tuple(prefix + pair for pair in combinations(range(start + 1, m + 1), 2))
        out.append(Triangle(prefix, members))
    return out


def triangle_partition_holds(m: int, tris: Sequence[Triangle] | None = None) -> bool:
    """True iff the triangles are pairwise disjoint and cover C_{(m-2)/2}(Sigma_m)."""
    tris = triangles(m) if tris is None else tris
    members = [s for T in tris for s in T.members]
    return len(members) == len(set(members)) and set(members) == set(
        enumerate_indices((m - 2) // 2, m)
    )


def l_equals_m(k: int) -> dict:
    """Compare L_k with M_{2(k-1)}: literal equality in lexicographic order and equivalence."""
    L = l_matrix(k)
    M = m_matrix(2 * (k - 1))
    witness = permutation_equivalent(L, M)
    return {
        "k": k,
        "m": 2 * (k - 1),
        "shape": list(L.shape),
        "literal_equal": L == M,
        "equivalent": witness is not None,
    }
