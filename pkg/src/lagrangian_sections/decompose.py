"""Direct-sum decomposition of B into inclusion-matrix blocks.

Rows and columns of B are grouped by their singleton tuple (labels whose
partner is absent).  Columns containing no pair at all are zero.  Each group
is checked entrywise against ``m_matrix(n - s)`` through the explicit map
"multi-index -> set of positions of the pairs it contains", and ranks of B are
compared with the sum of block ranks.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Iterable

from .blocks import l_matrix, m_matrix
from .contraction import build_B, plane_census
from .indexing import (
    MultiIndex,
    RowClass,
    SymplecticLabels,
    decompose_row_class,
    q_count,
    surviving_pairs,
)
from .linalg import (
    DEFAULT_PRIME_SEED,
    BinaryMatrix,
    Equivalence,
    FieldSpec,
    Permutation,
    rank,
    rank_certificate,
)

DEFAULT_CHARACTERISTICS = (0, 2, 3, 5, 7)


class _ZeroColumn:
    __slots__ = ()

    def __repr__(self):
        return "ZERO_COLUMN"


ZERO_COLUMN = _ZeroColumn()


def block_kind(s: int, n: int) -> int:
    """k such that a class with ``s`` singletons is an L_k block (m = n - s = 2(k - 1))."""
    return (n - s + 2) // 2


def top_kind(n: int) -> int:
    return (n + 2) // 2 if n % 2 == 0 else (n + 1) // 2


def classify_rows(labels: SymplecticLabels) -> dict[MultiIndex, RowClass]:
    return {alpha: decompose_row_class(alpha, labels) for alpha in labels.row_labels}


def classify_columns(labels: SymplecticLabels) -> dict[MultiIndex, RowClass | _ZeroColumn]:
    out = {}
    for beta in labels.col_labels:
        rc = decompose_row_class(beta, labels)
        out[beta] = ZERO_COLUMN if rc.pair_count == 0 else rc
    return out


def _groups(labels: SymplecticLabels):
    """Row and column index lists of B grouped by singleton tuple, plus zero columns."""
    rows = defaultdict(list)
    cols = defaultdict(list)
    zero = []
    for i, rc in enumerate(classify_rows(labels).values()):
        rows[rc.singletons].append(i)
    for j, rc in enumerate(classify_columns(labels).values()):
        if rc is ZERO_COLUMN:
            zero.append(j)
        else:
            cols[rc.singletons].append(j)
    return rows, cols, zero


def _class_order(key: MultiIndex):
    return (len(key), key)


@dataclass
class BlockCheck:
    singletons: MultiIndex
    kind: int
    block: BinaryMatrix
    verified: bool
    witness: Equivalence | None


def _positions(index: MultiIndex, pos: dict[int, int], n: int) -> MultiIndex:
    return tuple(sorted(pos[a] for a in index if a <= n and (2 * n + 1 - a) in index))


def verify_block(singletons: Iterable[int], labels: SymplecticLabels, _groups_cache=None) -> BlockCheck:
    """Extract the class block of B and compare it with M_{n-s} under the pair-position map.

    The witness carries block rows/columns onto rows/columns of ``m_matrix(n - s)``.
    """
    n = labels.n
    key = tuple(sorted(singletons))
    rows_by, cols_by, _ = _groups_cache or _groups(labels)
    if key not in rows_by:
        raise ValueError(f"no row class with singletons {key} for n={n}")
    B = build_B(labels)
    block = B.submatrix(rows_by[key], cols_by.get(key, []))
    s = len(key)
    M = m_matrix(n - s)
    pos = {j: k + 1 for k, j in enumerate(surviving_pairs(key, labels))}
    m_row = {lab: i for i, lab in enumerate(M.row_labels)}
    m_col = {lab: j for j, lab in enumerate(M.col_labels)}
    try:
        r_img = [m_row[_positions(a, pos, n)] for a in block.row_labels]
        c_img = [m_col[_positions(b, pos, n)] for b in block.col_labels]
        witness = Equivalence(Permutation(r_img), Permutation(c_img))
    except (KeyError, ValueError):
        return BlockCheck(key, block_kind(s, n), block, False, None)
    ok = block.permute(witness.row_perm, witness.col_perm) == M
    return BlockCheck(key, block_kind(s, n), block, ok, witness if ok else None)


@dataclass
class ClassRecord:
    singletons: MultiIndex
    block_kind: int
    row_count: int
    col_count: int
    verified: bool


@dataclass
class RankRow:
    direct: int
    block_sum: int
    certificate: dict

    @property
    def consistent(self) -> bool:
        return self.direct == self.block_sum


@dataclass
class DecompositionReport:
    n: int
    parity: str
    classes: list[ClassRecord]
    zero_column_count: int
    census: dict[int, int]
    plane_census: dict[int, int]
    census_consistent: bool
    partition_ok: bool
    rank_table: dict[int, RankRow] = field(default_factory=dict)
    corollary_identity_holds: bool = False

    @property
    def all_verified(self) -> bool:
        return all(c.verified for c in self.classes)

    @property
    def ranks_consistent(self) -> bool:
        return all(r.consistent for r in self.rank_table.values())

    @property
    def ok(self) -> bool:
        return (
            self.all_verified
            and self.partition_ok
            and self.census_consistent
            and self.ranks_consistent
            and self.corollary_identity_holds
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "parity": self.parity,
            "classes": [
                {**asdict(c), "singletons": list(c.singletons)} for c in self.classes
            ],
            "zero_column_count": self.zero_column_count,
            "census": {str(k): v for k, v in self.census.items()},
            "plane_census": {str(k): v for k, v in self.plane_census.items()},
            "census_consistent": self.census_consistent,
            "partition_ok": self.partition_ok,
            "rank_table": {
                str(p): {"direct": r.direct, "block_sum": r.block_sum, "certificate": r.certificate}
                for p, r in self.rank_table.items()
            },
            "corollary_identity_holds": self.corollary_identity_holds,
        }


def expected_census(labels: SymplecticLabels) -> dict[int, int]:
    """Block census predicted by the counting law: q_count(s, n) blocks L_{(n-s+2)/2}."""
    n = labels.n
    out = {}
    for s in range(n % 2, n - 1, 2):
        out[block_kind(s, n)] = q_count(s, labels)
    return out


def verify_theorem(
    labels: SymplecticLabels,
    characteristics: Iterable[int] = DEFAULT_CHARACTERISTICS,
    seed: int = DEFAULT_PRIME_SEED,
) -> DecompositionReport:
    """Verify every class block and compare ranks of B with block-rank sums."""
    n = labels.n
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    B = build_B(labels)
    groups = _groups(labels)
    rows_by, cols_by, zero = groups
    keys = sorted(rows_by, key=_class_order)

    checks = [verify_block(k, labels, groups) for k in keys]
    classes = [
        ClassRecord(c.singletons, c.kind, c.block.n_rows, c.block.n_cols, c.verified) for c in checks
    ]
    census: dict[int, int] = {}
    for c in classes:
        census[c.block_kind] = census.get(c.block_kind, 0) + 1
    census = dict(sorted(census.items(), reverse=True))

    row_cover = sorted(i for k in keys for i in rows_by[k])
    col_cover = sorted([j for k in cols_by for j in cols_by[k]] + zero)
    partition_ok = (
        row_cover == list(range(B.n_rows))
        and col_cover == list(range(B.n_cols))
        and set(cols_by) <= set(rows_by)
        and sum(c.row_count for c in classes) == comb(2 * n, n - 2)
        and sum(c.col_count for c in classes) + len(zero) == comb(2 * n, n)
        and len(zero) == 2**n
        and all(not any((r >> j) & 1 for r in B.rows) for j in zero)
    )
    census_consistent = census == expected_census(labels)

    report = DecompositionReport(
        n=n,
        parity="even" if n % 2 == 0 else "odd",
        classes=classes,
        zero_column_count=len(zero),
        census=census,
        plane_census=plane_census(labels),
        census_consistent=census_consistent,
        partition_ok=partition_ok,
        corollary_identity_holds=corollary_counts(labels),
    )
    block_rank_cache: dict = {}
    for p in characteristics:
        f = FieldSpec.of(p)
        cert = rank_certificate(B, f, seed=seed)
        total = 0
        for c in checks:
            key = (c.block, p)
            if key not in block_rank_cache:
                block_rank_cache[key] = rank(c.block, f, seed=seed)
            total += block_rank_cache[key]
        report.rank_table[p] = RankRow(cert.rank, total, cert.to_dict())
    return report


def corollary_counts(labels: SymplecticLabels) -> bool:
    """C(2n, n-2) equals the sum over class sizes of (number of classes) x (rows per class)."""
    n = labels.n
    total = 0
    for s in range(n % 2, n - 1, 2):
        total += q_count(s, labels) * comb(n - s, (n - 2 - s) // 2)
    return total == comb(2 * n, n - 2)


def proposition_rank_check(labels: SymplecticLabels, field_: FieldSpec | int, seed: int = DEFAULT_PRIME_SEED) -> dict:
    """If B has full row rank over the field, every L_k block (2 <= k <= r) must too."""
    n = labels.n
    if n % 2:
        raise ValueError("the rank implication is stated for even n")
    f = FieldSpec.of(field_)
    B = build_B(labels)
    direct = rank(B, f, seed=seed)
    full = comb(2 * n, n - 2)
    out = {
        "characteristic": f.p,
        "rank_B": direct,
        "full_rank": full,
        "hypothesis": direct == full,
        "vacuous": direct != full,
        "blocks": {},
    }
    if direct == full:
        for k in range(2, top_kind(n) + 1):
            L = l_matrix(k)
            rk = rank(L, f, seed=seed)
            out["blocks"][k] = {"rank": rk, "expected": L.n_rows, "pass": rk == L.n_rows}
    out["pass"] = all(b["pass"] for b in out["blocks"].values())
    return out
