"""Exact row/column permutation equivalence of 0/1 matrices.

The matrix is viewed as a bipartite graph (rows on one side, columns on the
other).  Both graphs are colour-refined together so that colours are directly
comparable, then vertices are individualised one at a time with backtracking
until the colouring is discrete.  A discrete colouring gives a candidate
bijection that is checked entrywise before being returned.
"""

from __future__ import annotations

import sys
from collections import Counter
from typing import NamedTuple

from .matrix import BinaryMatrix, Permutation, iter_bits


class Equivalence(NamedTuple):
    """Witness with ``A.permute(row_perm, col_perm) == B``."""

    row_perm: Permutation
    col_perm: Permutation


def _adjacency(M: BinaryMatrix) -> list[list[int]]:
    R = M.n_rows
    adj: list[list[int]] = [[] for _ in range(R + M.n_cols)]
    for i, r in enumerate(M.rows):
        for j in iter_bits(r):
            adj[i].append(R + j)
            adj[R + j].append(i)
    return adj


def _refine(adj_a, adj_b, col_a, col_b):
    """Joint colour refinement to a stable colouring; None if the colourings diverge."""
    n_colors = len(set(col_a))
    while True:
        sig_a = [(col_a[v], tuple(sorted(col_a[u] for u in adj_a[v]))) for v in range(len(adj_a))]
        sig_b = [(col_b[v], tuple(sorted(col_b[u] for u in adj_b[v]))) for v in range(len(adj_b))]
        names = {s: k for k, s in enumerate(sorted(set(sig_a) | set(sig_b)))}
        col_a = [names[s] for s in sig_a]
        col_b = [names[s] for s in sig_b]
        if Counter(col_a) != Counter(col_b):
            return None
        if len(names) == n_colors:
            return col_a, col_b
        n_colors = len(names)


def _search(adj_a, adj_b, col_a, col_b, check):
    refined = _refine(adj_a, adj_b, col_a, col_b)
    if refined is None:
        return None
    col_a, col_b = refined
    sizes = Counter(col_a)
    open_cells = [c for c, s in sizes.items() if s > 1]
    if not open_cells:
        where_b = {c: v for v, c in enumerate(col_b)}
        mapping = [where_b[c] for c in col_a]
        return mapping if check(mapping) else None
    cell = min(open_cells, key=lambda c: (sizes[c], c))
    v = col_a.index(cell)
    fresh = len(sizes)
    for w in (u for u, c in enumerate(col_b) if c == cell):
        na = list(col_a)
        nb = list(col_b)
        na[v] = nb[w] = fresh
        found = _search(adj_a, adj_b, na, nb, check)
        if found is not None:
            return found
    return None


def permutation_equivalent(A: BinaryMatrix, B: BinaryMatrix) -> Equivalence | None:
    """Row and column permutations carrying ``A`` onto ``B``, or None."""
    if A.shape != B.shape or A.nnz != B.nnz:
        return None
    if sorted(A.row_weights()) != sorted(B.row_weights()):
        return None
    if sorted(A.col_weights()) != sorted(B.col_weights()):
        return None
    R, C = A.shape
    adj_a, adj_b = _adjacency(A), _adjacency(B)
    init = [0] * R + [1] * C

    def check(mapping):
        for i, r in enumerate(A.rows):
            x = 0
            for j in iter_bits(r):
                x |= 1 << (mapping[R + j] - R)
            if B.rows[mapping[i]] != x:
                return False
        return True

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * (R + C) + 100))
    try:
        mapping = _search(adj_a, adj_b, init, list(init), check)
    finally:
        sys.setrecursionlimit(limit)
    if mapping is None:
        return None
    row_perm = Permutation(tuple(mapping[:R]))
    col_perm = Permutation(tuple(m - R for m in mapping[R:]))
    return Equivalence(row_perm, col_perm)
