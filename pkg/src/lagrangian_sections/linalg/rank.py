"""Exact rank of 0/1 matrices over finite fields and over the rationals.

GF(2) works on the packed rows directly.  Odd characteristic uses sparse
row dictionaries, which keeps fill-in inside the connected components of the
matrix (the blocks, for the matrices built in this package).  Characteristic
0 uses fraction-free Bareiss elimination for narrow matrices and multi-modular
elimination with random 62-bit primes otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .fields import DEFAULT_PRIME_SEED, FieldSpec, random_primes
from .matrix import BinaryMatrix, iter_bits

BAREISS_MAX_COLS = 512
DEFAULT_PRIME_COUNT = 3


@dataclass(frozen=True)
class RankCertificate:
    rank: int
    field: FieldSpec
    method: str  # "gf2" | "gfp" | "bareiss" | "multimodular"
    primes: tuple[int, ...] = ()
    ranks_mod_p: tuple[int, ...] = ()
    status: str = "exact"  # or "certified-probabilistic" / "lower-bound"

    def to_dict(self) -> dict:
        out = {"rank": self.rank, "method": self.method, "status": self.status}
        if self.primes:
            out["primes"] = list(self.primes)
            out["ranks_mod_p"] = list(self.ranks_mod_p)
        return out


def gf2_rank(rows, n_cols: int | None = None) -> int:
    """Rank over GF(2) of bit-packed rows."""
    pivots: dict[int, int] = {}
    for x in rows:
        while x:
            top = x.bit_length() - 1
            piv = pivots.get(top)
            if piv is None:
                pivots[top] = x
                break
            x ^= piv
    return len(pivots)


def sparse_rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    """Rank over GF(p) of sparse rows given as ``{column: value}``."""
    pivots: dict[int, dict[int, int]] = {}
    for src in rows:
        row = {c: v % p for c, v in src.items() if v % p}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {c: v * inv % p for c, v in row.items()}
                break
            f = row[lead]
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


def _sparse_rows(M: BinaryMatrix) -> list[dict[int, int]]:
    return [dict.fromkeys(iter_bits(r), 1) for r in M.rows]


def bareiss_rank(data) -> int:
    """Rank over Q of an integer matrix by fraction-free elimination."""
    a = np.array(data, dtype=object)
    if a.ndim != 2 or a.size == 0:
        return 0
    m, n = a.shape
    prev = 1
    r = 0
    for c in range(n):
        nz = np.flatnonzero(a[r:, c] != 0)
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        p = a[r, c]
        if r + 1 < m:
            below = a[r + 1 :, c].copy()
            a[r + 1 :, c + 1 :] = (p * a[r + 1 :, c + 1 :] - np.outer(below, a[r, c + 1 :])) // prev
            a[r + 1 :, c] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def rank_certificate(
    M: BinaryMatrix,
    field: FieldSpec | int,
    *,
    seed: int = DEFAULT_PRIME_SEED,
    n_primes: int = DEFAULT_PRIME_COUNT,
    method: str | None = None,
) -> RankCertificate:
    """Rank of ``M`` over ``field`` together with how it was obtained.

    ``method`` forces "bareiss" or "multimodular" in characteristic 0.
    """
    field = FieldSpec.of(field)
    p = field.characteristic
    if p == 2:
        return RankCertificate(gf2_rank(M.rows), field, "gf2")
    if p:
        return RankCertificate(sparse_rank_mod_p(_sparse_rows(M), p), field, "gfp")
    if method is None:
        method = "bareiss" if M.n_cols <= BAREISS_MAX_COLS else "multimodular"
    if method == "bareiss":
        return RankCertificate(bareiss_rank(M.to_lists()), field, "bareiss")
    if method != "multimodular":
        raise ValueError(f"unknown method {method!r}")
    primes = tuple(random_primes(n_primes, seed))
    sparse = _sparse_rows(M)
    ranks = tuple(sparse_rank_mod_p(sparse, q) for q in primes)
    best = max(ranks)
    # rank mod q never exceeds the rational rank
    status = "certified-probabilistic" if ranks.count(best) >= 2 else "lower-bound"
    if best == min(M.n_rows, M.n_cols):
        status = "exact"
    return RankCertificate(best, field, "multimodular", primes, ranks, status)


def rank(M: BinaryMatrix, field: FieldSpec | int, **kwargs) -> int:
    return rank_certificate(M, field, **kwargs).rank
