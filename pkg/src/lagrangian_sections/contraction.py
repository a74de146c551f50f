"""Kernel conditions of the contraction map in Plücker coordinates.

Row ``alpha`` of the matrix B (alpha in I(n-2, 2n)) is the linear form whose
terms are the coordinates obtained by inserting a full pair {i, 2n+1-i} that
is disjoint from alpha.  All coefficients are 1; a signed variant is kept for
comparison against genuine Lagrangian points in odd characteristic.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Mapping, Sequence

from .indexing import MultiIndex, SymplecticLabels, enumerate_indices, multi_index
from .linalg import BinaryMatrix, FieldSpec

CONVENTIONS = ("unsigned", "signed")


@dataclass(frozen=True)
class PlaneForm:
    row_label: MultiIndex
    terms: tuple[MultiIndex, ...]
    # +1/-1 per term under the signed convention, aligned with ``terms``
    signs: tuple[int, ...] = ()

    def __len__(self):
        return len(self.terms)


def _inserted(alpha: MultiIndex, i: int, j: int) -> MultiIndex:
    return tuple(sorted(alpha + (i, j)))


def _pair_sign(beta: MultiIndex, i: int, j: int) -> int:
    s = beta.index(i) + 1
    t = beta.index(j) + 1
    return -1 if (s + t) % 2 else 1


def plane_form(alpha: MultiIndex, labels: SymplecticLabels) -> PlaneForm:
    """The linear form attached to ``alpha``: one term per pair disjoint from it."""
    n = labels.n
    alpha = multi_index(alpha, 2 * n)
    if len(alpha) != n - 2:
        raise ValueError(f"row label must have length {n - 2}, got {alpha}")
    support = set(alpha)
    terms, signs = [], []
    for i in range(1, n + 1):
        j = labels.involution(i)
        if i in support or j in support:
            continue
        beta = _inserted(alpha, i, j)
        terms.append(beta)
        signs.append(_pair_sign(beta, i, j))
    return PlaneForm(alpha, tuple(terms), tuple(signs))


@lru_cache(maxsize=None)
def _build_B(n: int) -> BinaryMatrix:
    labels = SymplecticLabels(n)
    rows_l = labels.row_labels
    cols_l = labels.col_labels
    col_pos = {c: k for k, c in enumerate(cols_l)}
    rows = []
    for alpha in rows_l:
        x = 0
        for beta in plane_form(alpha, labels).terms:
            x |= 1 << col_pos[beta]
        rows.append(x)
    return BinaryMatrix(len(rows_l), len(cols_l), rows, rows_l, cols_l)


def build_B(labels: SymplecticLabels) -> BinaryMatrix:
    """C(2n, n-2) x C(2n, n) matrix of the kernel conditions, lexicographic labels."""
    if labels.n < 2:
        raise ValueError(f"n must be >= 2, got {labels.n}")
    return _build_B(labels.n)


def plane_census(labels: SymplecticLabels) -> dict[int, int]:
    """Histogram ``{number of terms: number of rows}`` of B, largest weight first."""
    counts = Counter(build_B(labels).row_weights())
    return dict(sorted(counts.items(), reverse=True))


@dataclass
class PluckerVector:
    """Sparse Plücker coordinates ``{beta: value}`` of a point in the exterior power."""

    n: int
    coords: dict[MultiIndex, object]
    field: FieldSpec = field(default_factory=lambda: FieldSpec(0))

    def __post_init__(self):
        self.field = FieldSpec.of(self.field)
        clean = {}
        for beta, v in self.coords.items():
            beta = multi_index(beta, 2 * self.n)
            if len(beta) != self.n:
                raise ValueError(f"coordinate {beta} is not in I({self.n}, {2 * self.n})")
            v = self.field.reduce(v)
            if v:
                clean[beta] = v
        self.coords = clean

    def __getitem__(self, beta: MultiIndex):
        return self.coords.get(tuple(beta), 0)

    def is_zero(self) -> bool:
        return not self.coords


def kernel_violations(p: PluckerVector, convention: str = "unsigned") -> list[tuple[MultiIndex, object]]:
    """Rows of B (or its signed variant) that do not annihilate ``p``, with their values."""
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}, got {convention!r}")
    labels = SymplecticLabels(p.n)
    # only rows touching a nonzero coordinate can fail
    candidates = set()
    for beta in p.coords:
        support = set(beta)
        for i in range(1, p.n + 1):
            j = labels.involution(i)
            if i in support and j in support:
                candidates.add(tuple(x for x in beta if x != i and x != j))
    out = []
    for alpha in sorted(candidates):
        form = plane_form(alpha, labels)
        signs = form.signs if convention == "signed" else (1,) * len(form)
        value = p.field.reduce(sum(s * p[beta] for s, beta in zip(signs, form.terms)))
        if value:
            out.append((alpha, value))
    return out


def kernel_membership(p: PluckerVector, convention: str = "unsigned") -> bool:
    return not kernel_violations(p, convention)


# Lagrangian points ------------------------------------------------------


def _det(mat: list[list], p: int):
    """Determinant over GF(p), or exactly over Q when ``p == 0``."""
    a = [[Fraction(x) if p == 0 else x % p for x in row] for row in mat]
    size = len(a)
    det = 1
    for c in range(size):
        piv = next((r for r in range(c, size) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        pv = a[c][c]
        det = det * pv if p == 0 else det * pv % p
        inv = 1 / pv if p == 0 else pow(pv, -1, p)
        for r in range(c + 1, size):
            f = a[r][c] * inv if p == 0 else a[r][c] * inv % p
            if f:
                a[r] = [x - f * y if p == 0 else (x - f * y) % p for x, y in zip(a[r], a[c])]
    return det if p else (det.numerator if det.denominator == 1 else det)


def generator_matrix(S: Sequence[Sequence[int]], labels: SymplecticLabels) -> list[list[int]]:
    """n x 2n matrix with row i = e_i + sum_j S[i][j] e_{2n+1-j}."""
    n = labels.n
    G = [[0] * (2 * n) for _ in range(n)]
    for i in range(n):
        G[i][i] = 1
        for j in range(n):
            G[i][2 * n - 1 - j] = S[i][j]
    return G


def is_isotropic(G: Sequence[Sequence[int]], labels: SymplecticLabels, field: FieldSpec | int) -> bool:
    """Every pair of rows of ``G`` pairs to zero under the alternating form."""
    field = FieldSpec.of(field)
    m = 2 * labels.n
    for u, v in combinations(G, 2):
        total = 0
        for a_ in range(m):
            if u[a_]:
                b = m - 1 - a_
                total += u[a_] * v[b] * labels.form(a_ + 1, b + 1)
        if field.reduce(total):
            return False
    return True


def sample_lagrangian(S, labels: SymplecticLabels, field: FieldSpec | int = 0) -> PluckerVector:
    """Plücker vector of the row space of the generator built from symmetric ``S``."""
    field = FieldSpec.of(field)
    n = labels.n
    S = [[int(x) for x in row] for row in S]
    if len(S) != n or any(len(row) != n for row in S):
        raise ValueError(f"S must be {n} x {n}")
    if any(field.reduce(S[i][j] - S[j][i]) for i in range(n) for j in range(i + 1, n)):
        raise ValueError("S is not symmetric")
    G = generator_matrix(S, labels)
    if not is_isotropic(G, labels, field):
        raise AssertionError("generator rows are not isotropic")
    coords = {}
    for beta in labels.col_labels:
        minor = [[row[b - 1] for b in beta] for row in G]
        coords[beta] = _det(minor, field.p)
    return PluckerVector(n, coords, field)


def coordinate_lagrangian(sides: Sequence[int], labels: SymplecticLabels, field: FieldSpec | int = 0) -> PluckerVector:
    """Indicator of the coordinate subspace taking one label from each pair.

    ``sides[j]`` is 0 to take ``j+1`` and 1 to take its partner.
    """
    n = labels.n
    if len(sides) != n:
        raise ValueError(f"need {n} sides, got {len(sides)}")
    beta = tuple(sorted(j + 1 if s == 0 else labels.involution(j + 1) for j, s in enumerate(sides)))
    return PluckerVector(n, {beta: 1}, field)


def random_symmetric(n: int, field: FieldSpec | int, rng: random.Random) -> list[list[int]]:
    field = FieldSpec.of(field)
    lo, hi = (0, field.p - 1) if field.p else (-3, 3)
    S = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            S[i][j] = S[j][i] = rng.randint(lo, hi)
    return S


def alternating_coordinate(p: PluckerVector, seq: Sequence[int]):
    """Coordinate of e_{seq[0]} ^ ... ^ e_{seq[-1]} for an unsorted label sequence."""
    if len(set(seq)) < len(seq):
        return 0
    order = sorted(range(len(seq)), key=seq.__getitem__)
    sign = 1
    seen = [False] * len(seq)
    for i in range(len(seq)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign * p[tuple(sorted(seq))]


def three_term_relations_hold(p: PluckerVector) -> bool:
    """Check the three-term Grassmann-Plücker quadrics on ``p``."""
    n = p.n
    for A in enumerate_indices(n - 2, 2 * n):
        rest = [x for x in range(1, 2 * n + 1) if x not in A]
        def c(x, y):
            return alternating_coordinate(p, A + (x, y))

        for i, j, k, l in combinations(rest, 4):
            val = c(i, j) * c(k, l) - c(i, k) * c(j, l) + c(i, l) * c(j, k)
            if p.field.reduce(val):
                return False
    return True


def convention_survey(
    ns: Sequence[int] = (2, 3, 4, 5),
    fields: Sequence[int] = (2, 3, 5),
    samples: int = 100,
    seed: int = 0,
) -> dict:
    """Which sign conventions annihilate every sampled Lagrangian point.

    Returns ``{characteristic: {n: {"unsigned": bool, "signed": bool}}}``.
    """
    out: dict = {}
    for p in fields:
        field_ = FieldSpec.of(p)
        per_n = {}
        for n in ns:
            labels = SymplecticLabels(n)
            rng = random.Random(f"{seed}:{p}:{n}")
            ok = dict.fromkeys(CONVENTIONS, True)
            for _ in range(samples):
                point = sample_lagrangian(random_symmetric(n, field_, rng), labels, field_)
                for conv in CONVENTIONS:
                    if ok[conv] and not kernel_membership(point, conv):
                        ok[conv] = False
            per_n[n] = ok
        out[p] = per_n
    return out
