"""Independent oracles shared by the test modules.

None of these go through the package's elimination or construction code.
"""

from itertools import combinations
from math import comb

import numpy as np
import pytest
import sympy


def dense_rank_mod_p(arr, p):
    """Textbook row reduction over GF(p) on a dense numpy array."""
    a = np.array(arr, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        r += 1
        if r == rows:
            break
    return r


def sympy_rank(arr):
    return sympy.Matrix(np.asarray(arr).tolist()).rank()


def wilson_rank(t, k, v, p):
    """Rank of the t-subset vs k-subset inclusion matrix of a v-set over GF(p) (p = 0: rationals).

    Valid for t <= min(k, v - k).
    """
    total = 0
    for i in range(t + 1):
        if p == 0 or comb(k - i, t - i) % p:
            total += comb(v, i) - (comb(v, i - 1) if i else 0)
    return total


def partner_scan(alpha, n):
    """Brute-force singleton/pair split: compare every element with every other."""
    singles = []
    pairs = 0
    for a in alpha:
        partners = [b for b in alpha if a + b == 2 * n + 1]
        if partners:
            pairs += 1
        else:
            singles.append(a)
    return tuple(singles), pairs // 2


def brute_pair_free(t, n):
    return [c for c in combinations(range(1, 2 * n + 1), t) if all(a + b != 2 * n + 1 for a, b in combinations(c, 2))]


@pytest.fixture
def oracles():
    return {
        "dense_rank_mod_p": dense_rank_mod_p,
        "sympy_rank": sympy_rank,
        "wilson_rank": wilson_rank,
        "partner_scan": partner_scan,
        "brute_pair_free": brute_pair_free,
    }


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
