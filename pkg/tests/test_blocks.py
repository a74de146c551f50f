from itertools import combinations
from math import comb
from pathlib import Path

import pytest

from lagrangian_sections.blocks import (
    a,
    a0,
    inclusion_matrix,
    join_bottom,
    l_equals_m,
    l_matrix,
    m_matrix,
    phi,
    triangle_partition_holds,
    triangles,
    with_identity,
)
from lagrangian_sections.linalg import BinaryMatrix, permutation_equivalent, rank

from conftest import wilson_rank

DATA = Path(__file__).parent / "data"

PRINTED_L3 = [
    [1, 1, 1, 0, 0, 0],
    [1, 0, 0, 1, 1, 0],
    [0, 1, 0, 1, 0, 1],
    [0, 0, 1, 0, 1, 1],
]


def printed_m6():
    return [[int(c) for c in line.strip()] for line in (DATA / "m6_printed.txt").read_text().splitlines()]


def test_a0_examples():
    assert a0(3).to_lists() == PRINTED_L3
    assert a0(1).to_lists() == [[1], [1]]
    A5 = a0(5)
    assert A5.shape == (6, 15)
    assert set(A5.row_weights()) == {5} and set(A5.col_weights()) == {2}
    with pytest.raises(ValueError):
        a0(0)


@pytest.mark.parametrize("k", range(1, 8))
def test_a0_is_element_pair_incidence(k):
    pairs = list(combinations(range(k + 1), 2))
    expected = [[1 if i in pr else 0 for pr in pairs] for i in range(k + 1)]
    assert a0(k).to_lists() == expected


def test_with_identity():
    assert with_identity(a0(3), 6).shape == (10, 6)
    assert with_identity(BinaryMatrix.zeros(0, 1), 1).to_lists() == [[1]]
    assert with_identity(a0(1), 1).to_lists() == [[1], [1], [1]]
    with pytest.raises(ValueError):
        with_identity(a0(3), 5)


def test_join_bottom():
    J = join_bottom([BinaryMatrix.identity(2), BinaryMatrix.identity(1)])
    assert J.to_lists() == [[1, 0, 0], [0, 1, 1]]
    assert join_bottom([]).shape == (0, 0)
    with pytest.raises(ValueError):
        join_bottom([BinaryMatrix.identity(1), BinaryMatrix.identity(2)])


def test_a4_level1_is_m6_up_to_rows():
    ops = [with_identity(a(4 - j, 0), comb(5 - j, 2)) for j in range(4)]
    assert [o.n_rows for o in ops] == [15, 10, 6, 3]
    J = join_bottom(ops)
    assert J.shape == (15, 20) and J == a(4, 1)
    assert sorted(map(tuple, J.to_lists())) == sorted(map(tuple, printed_m6()))


@pytest.mark.parametrize("level", range(0, 5))
def test_a1_height(level):
    assert a(1, level).n_rows == level + 2


@pytest.mark.parametrize("k", range(2, 8))
def test_l_matrix_shape_and_weights(k):
    m = 2 * (k - 1)
    L = l_matrix(k)
    assert L.shape == (comb(m, (m - 2) // 2), comb(m, m // 2))
    assert set(L.row_weights()) == {m // 2 + 1}
    assert set(L.col_weights()) == {m // 2}


def test_l7_shape():
    assert l_matrix(7).shape == (792, 924)


def test_inclusion_matrix_small():
    M = inclusion_matrix(1, 2, 3)
    assert M.to_lists() == [[1, 1, 0], [1, 0, 1], [0, 1, 1]]
    assert list(M.col_labels) == [(1, 2), (1, 3), (2, 3)]


def test_m_matrix_printed_m6_literal():
    assert m_matrix(6).to_lists() == printed_m6()
    assert m_matrix(4).to_lists() == PRINTED_L3
    assert m_matrix(2).to_lists() == [[1, 1]]
    with pytest.raises(ValueError):
        m_matrix(5)


@pytest.mark.parametrize("m", [4, 6, 8, 10])
@pytest.mark.parametrize("p", [0, 2, 3, 5])
def test_m_matrix_rank_matches_wilson(m, p):
    t, kk = (m - 2) // 2, m // 2
    assert rank(m_matrix(m), p) == wilson_rank(t, kk, m, p)


@pytest.mark.parametrize("m,count", [(6, 1), (8, 6), (10, 28)])
def test_triangle_counts(m, count):
    tris = triangles(m)
    assert len(tris) == count
    assert triangle_partition_holds(m, tris)


def test_triangle_sizes_sum():
    assert sum(len(T) for T in triangles(10)) == comb(10, 4) == 210
    with pytest.raises(ValueError):
        triangles(7)


def test_triangle_partition_detects_overlap():
    tris = triangles(8)
    assert not triangle_partition_holds(8, tris + tris[:1])


@pytest.mark.parametrize("m", [8, 10, 12])
def test_phi_first_triangle_is_a_level1(m):
    T = triangles(m)[0]
    P = phi(T.members, m)
    # prefix (1, ..., (m-6)/2); the other pair indices form a set of size k + 2
    A = a(m - len(T.prefix) - 2, 1)
    assert permutation_equivalent(P, A) is not None


@pytest.mark.parametrize("k", range(2, 7))
def test_l_equals_m(k):
    res = l_equals_m(k)
    assert res["equivalent"] and res["literal_equal"]
    assert res["m"] == 2 * (k - 1)
