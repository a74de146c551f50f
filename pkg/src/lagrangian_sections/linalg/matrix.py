"""Labelled 0/1 matrices with bit-packed rows.

Row ``i`` is stored as a Python int whose bit ``j`` is entry ``(i, j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Sequence

import numpy as np


def iter_bits(x: int) -> Iterator[int]:
    """Positions of set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _check_labels(labels, size, what):
    if labels is None:
        return None
    labels = tuple(labels)
    if len(labels) != size:
        raise ValueError(f"{what} labels: expected {size}, got {len(labels)}")
    if len(set(labels)) != size:
        raise ValueError(f"{what} labels contain duplicates")
    return labels


@dataclass(frozen=True)
class Permutation:
    """A bijection on ``[0..n-1]``; ``images[i]`` is where ``i`` goes."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(i) for i in self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images do not form a permutation")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def __len__(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def then(self, other: "Permutation") -> "Permutation":
        """Apply ``self`` first, then ``other``."""
        return Permutation(tuple(other.images[j] for j in self.images))


class BinaryMatrix:
    """Immutable 0/1 matrix with optional row and column labels.

    Equality compares shape and entries only; labels are metadata.
    """

    __slots__ = ("n_rows", "n_cols", "rows", "row_labels", "col_labels", "_hash")

    def __init__(
        self,
        n_rows: int,
        n_cols: int,
        rows: Iterable[int],
        row_labels: Sequence[Hashable] | None = None,
        col_labels: Sequence[Hashable] | None = None,
    ):
        rows = tuple(rows)
        if len(rows) != n_rows:
            raise ValueError(f"expected {n_rows} rows, got {len(rows)}")
        for r in rows:
            if r < 0 or r >> n_cols:
                raise ValueError(f"row does not fit in {n_cols} columns")
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.rows = rows
        self.row_labels = _check_labels(row_labels, n_rows, "row")
        self.col_labels = _check_labels(col_labels, n_cols, "column")
        self._hash = None

    # construction ------------------------------------------------------

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "BinaryMatrix":
        return cls(n_rows, n_cols, [0] * n_rows)

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def ones(cls, n_rows: int, n_cols: int) -> "BinaryMatrix":
        return cls(n_rows, n_cols, [(1 << n_cols) - 1] * n_rows)

    @classmethod
    def from_dense(cls, data, row_labels=None, col_labels=None) -> "BinaryMatrix":
        arr = np.asarray(data, dtype=np.int64)
        if arr.ndim != 2:
            if arr.size == 0:
                arr = arr.reshape(0, 0)
            else:
                raise ValueError("expected a 2-d array")
        if not np.isin(arr, (0, 1)).all():
            raise ValueError("entries must be 0 or 1")
        n_rows, n_cols = arr.shape
        rows = [sum(1 << int(j) for j in np.flatnonzero(r)) for r in arr]
        return cls(n_rows, n_cols, rows, row_labels, col_labels)

    @classmethod
    def from_supports(cls, n_cols: int, supports: Iterable[Iterable[int]], row_labels=None, col_labels=None):
        """Build from per-row lists of nonzero column indices (0-based)."""
        rows = [sum(1 << j for j in set(s)) for s in supports]
        return cls(len(rows), n_cols, rows, row_labels, col_labels)

    # access ------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_rows, self.n_cols)

    def __getitem__(self, ij) -> int:
        i, j = ij
        if not (0 <= j < self.n_cols):
            raise IndexError(j)
        return (self.rows[i] >> j) & 1

    def row_support(self, i: int) -> list[int]:
        return list(iter_bits(self.rows[i]))

    def nonzeros(self) -> Iterator[tuple[int, int]]:
        """(row, col) pairs of nonzero entries, row-major."""
        for i, r in enumerate(self.rows):
            for j in iter_bits(r):
                yield i, j

    @property
    def nnz(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def row_weights(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def col_weights(self) -> list[int]:
        w = [0] * self.n_cols
        for r in self.rows:
            for j in iter_bits(r):
                w[j] += 1
        return w

    def to_array(self) -> np.ndarray:
        out = np.zeros(self.shape, dtype=np.int8)
        for i, j in self.nonzeros():
            out[i, j] = 1
        return out

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n_cols)] for r in self.rows]

    # transformations ---------------------------------------------------

    def transpose(self) -> "BinaryMatrix":
        cols = [0] * self.n_cols
        for i, r in enumerate(self.rows):
            for j in iter_bits(r):
                cols[j] |= 1 << i
        return BinaryMatrix(self.n_cols, self.n_rows, cols, self.col_labels, self.row_labels)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "BinaryMatrix":
        """Rows and columns picked (and ordered) by the given index lists."""
        col_pos = {c: k for k, c in enumerate(col_idx)}
        rows = []
        for i in row_idx:
            x = 0
            for j in iter_bits(self.rows[i]):
                k = col_pos.get(j)
                if k is not None:
                    x |= 1 << k
            rows.append(x)
        rl = None if self.row_labels is None else [self.row_labels[i] for i in row_idx]
        cl = None if self.col_labels is None else [self.col_labels[j] for j in col_idx]
        return BinaryMatrix(len(row_idx), len(col_idx), rows, rl, cl)

    def permute(self, row_perm: Permutation, col_perm: Permutation) -> "BinaryMatrix":
        """Matrix P with ``P[row_perm(i), col_perm(j)] == self[i, j]``."""
        if len(row_perm) != self.n_rows or len(col_perm) != self.n_cols:
            raise ValueError("permutation sizes do not match the matrix")
        rows = [0] * self.n_rows
        for i, r in enumerate(self.rows):
            x = 0
            for j in iter_bits(r):
                x |= 1 << col_perm(j)
            rows[row_perm(i)] = x
        rl = cl = None
        if self.row_labels is not None:
            rl = [None] * self.n_rows
            for i, lab in enumerate(self.row_labels):
                rl[row_perm(i)] = lab
        if self.col_labels is not None:
            cl = [None] * self.n_cols
            for j, lab in enumerate(self.col_labels):
                cl[col_perm(j)] = lab
        return BinaryMatrix(self.n_rows, self.n_cols, rows, rl, cl)

    def with_labels(self, row_labels=None, col_labels=None) -> "BinaryMatrix":
        return BinaryMatrix(self.n_rows, self.n_cols, self.rows, row_labels, col_labels)

    # dunder ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n_rows, self.n_cols, self.rows))
        return self._hash

    def __repr__(self):
        return f"BinaryMatrix({self.n_rows}x{self.n_cols}, nnz={self.nnz})"

    def __str__(self):
        return "\n".join("".join("1" if (r >> j) & 1 else "." for j in range(self.n_cols)) for r in self.rows)


def block_diagonal(blocks: Sequence[BinaryMatrix]) -> BinaryMatrix:
    """Direct sum of ``blocks``; labels survive only if every block carries them."""
    rows: list[int] = []
    offset = 0
    for b in blocks:
        rows.extend(r << offset for r in b.rows)
        offset += b.n_cols
    rl = cl = None
    if blocks and all(b.row_labels is not None for b in blocks):
        rl = [(k, lab) for k, b in enumerate(blocks) for lab in b.row_labels]
    if blocks and all(b.col_labels is not None for b in blocks):
        cl = [(k, lab) for k, b in enumerate(blocks) for lab in b.col_labels]
    return BinaryMatrix(len(rows), offset, rows, rl, cl)
