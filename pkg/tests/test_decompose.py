from math import comb

import pytest

from lagrangian_sections.blocks import l_matrix, m_matrix
from lagrangian_sections.decompose import (
    ZERO_COLUMN,
    block_kind,
    classify_columns,
    classify_rows,
    corollary_counts,
    expected_census,
    proposition_rank_check,
    top_kind,
    verify_block,
    verify_theorem,
)
from lagrangian_sections.indexing import RowClass, SymplecticLabels
from lagrangian_sections.linalg import rank

from conftest import partner_scan, wilson_rank


def test_classify_column_examples():
    cols5 = classify_columns(SymplecticLabels(5))
    assert cols5[(1, 2, 3, 4, 5)] is ZERO_COLUMN
    cols6 = classify_columns(SymplecticLabels(6))
    # 3 + 10 = 13, so all three are pairs
    assert cols6[(1, 2, 3, 10, 11, 12)] == RowClass.of((), 3)
    assert classify_columns(SymplecticLabels(4))[(1, 2, 7, 8)].singletons == ()


@pytest.mark.parametrize("n", range(2, 8))
def test_classification_agrees_with_partner_scan(n):
    L = SymplecticLabels(n)
    for beta, rc in classify_columns(L).items():
        singles, pc = partner_scan(beta, n)
        if pc == 0:
            assert rc is ZERO_COLUMN
        else:
            assert (rc.singletons, rc.pair_count) == (singles, pc)
    for alpha, rc in classify_rows(L).items():
        assert (rc.singletons, rc.pair_count) == partner_scan(alpha, n)


def test_block_kind():
    assert block_kind(0, 6) == 4 and block_kind(2, 6) == 3 and block_kind(4, 6) == 2
    assert block_kind(1, 5) == 3 and block_kind(3, 5) == 2
    assert top_kind(6) == 4 and top_kind(7) == 4


@pytest.mark.parametrize(
    "n,key,shape",
    [(6, (), (15, 20)), (6, (1, 2), (4, 6)), (5, (8,), (4, 6)), (4, (), (4, 6)), (7, (1,), (15, 20))],
)
def test_verify_block_examples(n, key, shape):
    chk = verify_block(key, SymplecticLabels(n))
    assert chk.verified and chk.block.shape == shape
    M = m_matrix(n - len(key))
    assert chk.block.permute(*chk.witness) == M


def test_verify_block_missing_class():
    with pytest.raises(ValueError):
        verify_block((1, 12), SymplecticLabels(6))


@pytest.mark.parametrize(
    "n,census",
    [
        (4, {3: 1, 2: 24}),
        (5, {3: 10, 2: 80}),
        (6, {4: 1, 3: 60, 2: 240}),
        (7, {4: 14, 3: 280, 2: 672}),
    ],
)
def test_census(n, census):
    assert expected_census(SymplecticLabels(n)) == census


@pytest.mark.parametrize("n", [4, 5, 6])
def test_verify_theorem_small(n):
    rep = verify_theorem(SymplecticLabels(n), characteristics=(0, 2, 3, 5))
    assert rep.ok
    assert rep.zero_column_count == 2**n
    assert sum(c.row_count for c in rep.classes) == comb(2 * n, n - 2)
    assert sum(c.col_count for c in rep.classes) + rep.zero_column_count == comb(2 * n, n)
    # oracle: each block is an inclusion matrix, so Wilson's formula gives its rank
    for p, row in rep.rank_table.items():
        expect = 0
        for k, count in rep.census.items():
            m = 2 * (k - 1)
            expect += count * wilson_rank((m - 2) // 2, m // 2, m, p)
        assert row.direct == row.block_sum == expect


def test_n4_full_rank_outside_char_2():
    rep = verify_theorem(SymplecticLabels(4), characteristics=(0, 2, 3, 5))
    assert rep.rank_table[0].direct == rep.rank_table[3].direct == rep.rank_table[5].direct == 28
    assert rep.rank_table[2].direct == 27


def test_report_to_dict():
    d = verify_theorem(SymplecticLabels(4), characteristics=(0,)).to_dict()
    assert d["census"] == {"3": 1, "2": 24} and d["zero_column_count"] == 16


@pytest.mark.parametrize("n", range(4, 12))
def test_corollary_counts(n):
    assert corollary_counts(SymplecticLabels(n))


def test_proposition_rank_check():
    res = proposition_rank_check(SymplecticLabels(6), 0)
    assert res["hypothesis"] and res["pass"]
    assert res["blocks"][4] == {"rank": 15, "expected": 15, "pass": True}
    vac = proposition_rank_check(SymplecticLabels(6), 2)
    assert vac["vacuous"] and vac["blocks"] == {}
    with pytest.raises(ValueError):
        proposition_rank_check(SymplecticLabels(5), 0)


@pytest.mark.parametrize("k", range(2, 6))
def test_l_block_ranks_vs_wilson(k):
    m = 2 * (k - 1)
    for p in (0, 2, 3, 5, 7):
        assert rank(l_matrix(k), p) == wilson_rank((m - 2) // 2, m // 2, m, p)
