from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lagrangian_sections.indexing import (
    RowClass,
    SymplecticLabels,
    admissible_tuples,
    class_row_count,
    decompose_row_class,
    enumerate_indices,
    multi_index,
    q_count,
)

from conftest import brute_pair_free, partner_scan


def test_enumerate_small():
    assert enumerate_indices(2, 4) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert enumerate_indices(0, 5) == [()]


def test_enumerate_i_4_12():
    assert len(enumerate_indices(4, 12)) == 495


@pytest.mark.parametrize("d,m", [(-1, 3), (4, 3)])
def test_enumerate_domain(d, m):
    with pytest.raises(ValueError):
        enumerate_indices(d, m)


@given(st.integers(0, 9).flatmap(lambda m: st.tuples(st.integers(0, m), st.just(m))))
def test_enumerate_count_and_order(dm):
    d, m = dm
    out = enumerate_indices(d, m)
    assert len(out) == comb(m, d)
    assert all(a < b for a, b in zip(out, out[1:]))
    assert all(all(x < y for x, y in zip(t, t[1:])) for t in out)


def test_multi_index_validation():
    assert multi_index([1, 3], 4) == (1, 3)
    with pytest.raises(ValueError):
        multi_index([3, 1], 4)
    with pytest.raises(ValueError):
        multi_index([1, 5], 4)


def test_labels():
    L = SymplecticLabels(6)
    assert L.involution(1) == 12 and L.involution(12) == 1
    assert L.pair_index(10) == 3
    assert all(L.involution(L.involution(i)) == i != L.involution(i) for i in range(1, 13))
    assert L.pairs(2) == [(1, 12), (2, 11)]
    assert L.form(1, 12) == 1 and L.form(12, 1) == -1 and L.form(1, 2) == 0


@pytest.mark.parametrize(
    "alpha,n",
    [((1, 8, 12), 6), ((2, 3, 6, 7), 4), ((1, 2, 11, 12), 6)],
)
def test_row_class_matches_partner_scan(alpha, n):
    rc = decompose_row_class(alpha, SymplecticLabels(n))
    assert (rc.singletons, rc.pair_count) == partner_scan(alpha, n)


def test_row_class_examples():
    assert decompose_row_class((1, 8, 12), SymplecticLabels(6)) == RowClass.of((8,), 1)
    # 2+7 = 3+6 = 9: both are pairs when n = 4
    assert decompose_row_class((2, 3, 6, 7), SymplecticLabels(4)) == RowClass.of((), 2)
    assert decompose_row_class((1, 2, 11, 12), SymplecticLabels(6)) == RowClass.of((), 2)


@pytest.mark.parametrize("n", range(2, 7))
def test_row_class_partition_of_rows(n):
    labels = SymplecticLabels(n)
    classes = {}
    for alpha in labels.row_labels:
        rc = decompose_row_class(alpha, labels)
        assert 2 * rc.pair_count + rc.size == n - 2
        assert rc.size % 2 == (n - 2) % 2
        classes.setdefault(rc.singletons, []).append(alpha)
    assert sum(len(v) for v in classes.values()) == comb(2 * n, n - 2)
    for key, members in classes.items():
        assert len(members) == class_row_count(len(key), labels)


def test_admissible_counts():
    L6 = SymplecticLabels(6)
    assert len(admissible_tuples(2, L6)) == 60
    assert len(admissible_tuples(4, L6)) == 240
    assert len(admissible_tuples(3, L6)) == 160
    assert admissible_tuples(7, L6) == []


@pytest.mark.parametrize("n", range(1, 9))
def test_q_count_closed_form_vs_enumeration(n):
    labels = SymplecticLabels(n)
    for t in range(0, n + 1):
        brute = brute_pair_free(t, n)
        assert admissible_tuples(t, labels) == brute
        assert q_count(t, labels) == len(brute)


def test_q_count_examples():
    assert q_count(2, SymplecticLabels(6)) == 60
    assert q_count(0, SymplecticLabels(3)) == 1
    assert q_count(3, SymplecticLabels(7)) == 280
    assert q_count(8, SymplecticLabels(3)) == 0


@pytest.mark.parametrize("n", [4, 6, 8])
def test_even_class_size_law(n):
    labels = SymplecticLabels(n)
    for ell in range(0, (n - 2) // 2 + 1):
        s = 2 * ell
        assert class_row_count(s, labels) == comb(n - s, (n - 2 - s) // 2)
        # every admissible tuple is realised as a class key
        realised = {decompose_row_class(a, labels).singletons for a in labels.row_labels}
        assert {t for t in admissible_tuples(s, labels)} <= realised
