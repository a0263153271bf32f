from math import comb

import pytest

from hypermod.multiplicities import (
    TwoRowTriple,
    m_closed_form,
    two_row_pairs,
    verify_against_oracle,
)
from hypermod.symchar import schur_dim_gl2
from hypermod.weights import Weight2


def triple(l1, l2, m1, m2, n1, n2):
    return TwoRowTriple(Weight2(l1, l2), Weight2(m1, m2), Weight2(n1, n2))


def test_closed_form_frozen_values():
    assert m_closed_form(triple(1, 1, 1, 1, 1, 1)) == 0
    assert m_closed_form(triple(4, 4, 4, 4, 4, 4)) == 1
    assert m_closed_form(triple(4, 0, 4, 0, 4, 0)) == 1
    assert m_closed_form(triple(7, 5, 6, 6, 6, 6)) == 0


def test_closed_form_rejects_bad_triples():
    with pytest.raises(ValueError, match="two-row triple"):
        m_closed_form(triple(1, 0, 1, 0, 2, 0))  # sizes differ
    with pytest.raises(ValueError, match="two-row triple"):
        m_closed_form(triple(0, -1, 0, -1, 0, -1))  # negative entries


def test_two_row_pairs():
    assert two_row_pairs(0) == [Weight2(0, 0)]
    assert two_row_pairs(5) == [Weight2(5, 0), Weight2(4, 1), Weight2(3, 2)]


def test_oracle_agreement_small_degrees():
    report = verify_against_oracle(8)
    assert report.passed
    assert report.mismatches == []
    # 1 + 1 + 8 + 8 + 27 + 27 + 64 + 64 + 125 triples across d = 0..8
    assert report.checked == sum((d // 2 + 1) ** 3 for d in range(9))


def test_oracle_vacuous_at_degree_zero():
    report = verify_against_oracle(0)
    assert report.passed and report.checked == 1
    assert m_closed_form(triple(0, 0, 0, 0, 0, 0)) == 1


def test_graded_dimension_identity():
    # the weighted count of invariants reproduces dim Sym^d of an 8-dim space
    for d in range(9):
        pairs = two_row_pairs(d)
        total = sum(
            m_closed_form(TwoRowTriple(lam, mu, nu))
            * schur_dim_gl2(lam)
            * schur_dim_gl2(mu)
            * schur_dim_gl2(nu)
            for lam in pairs
            for mu in pairs
            for nu in pairs
        )
        assert total == comb(d + 7, 7)
