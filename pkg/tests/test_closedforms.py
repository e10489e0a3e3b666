from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rank2mult.closedforms import (FORMULA_KEYS, F_A2, F_G2, F_G2_gf_check, G2_TABLE, a2_min_form,
                                   mu_closed)
from rank2mult.errors import DomainError, UnsupportedFormulaError
from rank2mult.freudenthal import freudenthal_table


def test_formula_keys():
    assert len(FORMULA_KEYS) == 15
    assert set(FORMULA_KEYS) == {(m, n) for m in range(5) for n in range(5) if m + n <= 4}
    assert set(G2_TABLE) == set(FORMULA_KEYS)


def test_hand_evaluations():
    assert mu_closed("A2", 1, 1, 1, 1) == 1
    assert mu_closed("G2", 0, 1, 0, 0) == 2
    assert mu_closed("C2", 0, 1, 0, 0) == 1
    assert F_G2(1, 0, 29, 2, 3) == 1
    assert F_G2(0, 1, 29, 2, 3) == 2


def test_declines_large_weights():
    with pytest.raises(UnsupportedFormulaError):
        mu_closed("A2", 5, 5, 3, 2)
    with pytest.raises(DomainError):
        mu_closed("A2", -1, 0, 0, 0)


@pytest.mark.parametrize("alg,bound", [("A2", 12), ("C2", 12), ("G2", 8)])
def test_formulas_match_oracle(alg, bound):
    for m, n in FORMULA_KEYS:
        for p in range(bound + 1):
            for q in range(bound + 1):
                assert mu_closed(alg, p, q, m, n) == freudenthal_table(alg, p, q)[(m, n)], (p, q, m, n)


def test_g2_integrality_to_50():
    for rst, _c, _pts in G2_TABLE.values():
        for p in range(51):
            for q in range(51):
                assert F_G2(p, q, *rst).denominator == 1


def test_g2_formulas_nonnegative_to_30():
    for m, n in FORMULA_KEYS:
        for p in range(31):
            for q in range(31):
                assert mu_closed("G2", p, q, m, n) >= 0


@given(st.integers(0, 40), st.integers(0, 40), st.sampled_from(FORMULA_KEYS))
def test_a2_symmetry(p, q, key):
    m, n = key
    assert mu_closed("A2", p, q, m, n) == mu_closed("A2", q, p, n, m)


def test_min_form():
    assert a2_min_form(2, 2, 0) == (3, 3)
    assert a2_min_form(0, 0, 0) == (1, 1)
    lhs, rhs = a2_min_form(0, 5, 1)
    assert lhs == rhs
    for s in range(3):
        for p in range(21):
            for q in range(21):
                lhs, rhs = a2_min_form(p, q, s)
                assert lhs == rhs


def test_F_A2_is_integer():
    for s in range(3):
        for p in range(10):
            for q in range(10):
                assert isinstance(F_A2(p, q, s), int)


def test_F_G2_exact_rational():
    assert isinstance(F_G2(3, 4, 29, 2, 3), Fraction)


def test_f_tilde_generating_function():
    report = F_G2_gf_check(10)
    assert report["passed"], report
