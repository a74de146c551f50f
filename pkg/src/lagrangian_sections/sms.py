"""Text serialisations of 0/1 matrices: SMS triplets, dense CSV, JSON."""

from __future__ import annotations

import os
import tempfile

from .linalg import BinaryMatrix


def to_sms(M: BinaryMatrix) -> str:
    """Header ``"rows cols M"``, one 1-based ``"i j 1"`` line per nonzero, ``"0 0 0"`` terminator."""
    lines = [f"{M.n_rows} {M.n_cols} M"]
    lines.extend(f"{i + 1} {j + 1} 1" for i, j in M.nonzeros())
    lines.append("0 0 0")
    return "\n".join(lines) + "\n"


def from_sms(text: str) -> BinaryMatrix:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 3 or lines[0][2] != "M":
        raise ValueError("missing SMS header 'rows cols M'")
    n_rows, n_cols = int(lines[0][0]), int(lines[0][1])
    rows = [0] * n_rows
    for lineno, parts in enumerate(lines[1:], start=2):
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'i j value'")
        i, j, v = (int(x) for x in parts)
        if (i, j, v) == (0, 0, 0):
            break
        if not (1 <= i <= n_rows and 1 <= j <= n_cols):
            raise ValueError(f"line {lineno}: entry ({i}, {j}) out of range")
        if v not in (0, 1):
            raise ValueError(f"line {lineno}: value {v} is not 0/1")
        if v:
            rows[i - 1] |= 1 << (j - 1)
    else:
        raise ValueError("missing '0 0 0' terminator")
    return BinaryMatrix(n_rows, n_cols, rows)


def to_csv(M: BinaryMatrix) -> str:
    return "".join(",".join(map(str, row)) + "\n" for row in M.to_lists())


def to_json_dict(M: BinaryMatrix) -> dict:
    out = {
        "schema_version": 1,
        "n_rows": M.n_rows,
        "n_cols": M.n_cols,
        "rows": [M.row_support(i) for i in range(M.n_rows)],
    }
    if M.row_labels is not None:
        out["row_labels"] = [list(lab) for lab in M.row_labels]
    if M.col_labels is not None:
        out["col_labels"] = [list(lab) for lab in M.col_labels]
    return out


def write_atomic(path: str, text: str) -> None:
    """Write ``text`` to ``path`` through a temporary file and a rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
