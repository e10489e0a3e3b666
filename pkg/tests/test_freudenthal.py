import pytest

from rank2mult.errors import DomainError
from rank2mult.freudenthal import (XVARS, character_for_cartan, dimension_checksum, freudenthal_table,
                                   oracle_character, oracle_multiplicity)
from rank2mult.liecore import ALGEBRAS, C2_SWAPPED, CARTAN, weyl_dim
from rank2mult.poly import LaurentPoly

A2_Z1 = "x1 + x2^-1 + x1^-1*x2"
C2_Z1 = "x1 + x1^-1 + x1*x2^-1 + x1^-1*x2"
G2_Z1 = "1 + x1 + x1^-1 + x1*x2^-1 + x1^-1*x2 + x1^2*x2^-1 + x1^-2*x2"
G2_Z2 = ("2 + x1 + x1^-1 + x2 + x2^-1 + x1*x2^-1 + x1^-1*x2 + x1^2*x2^-1 + x1^-2*x2"
         " + x1^3*x2^-1 + x1^-3*x2 + x1^3*x2^-2 + x1^-3*x2^2")


def P(text):
    return LaurentPoly.parse(text, XVARS)


def test_small_tables():
    assert dict(freudenthal_table("A2", 1, 1).entries) == {(1, 1): 1, (0, 0): 2}
    assert dict(freudenthal_table("G2", 0, 1).entries) == {(0, 1): 1, (1, 0): 1, (0, 0): 2}
    for alg in ALGEBRAS:
        assert dict(freudenthal_table(alg, 0, 0).entries) == {(0, 0): 1}


def test_point_queries():
    assert oracle_multiplicity("A2", 1, 0, 1, 0) == 1
    assert oracle_multiplicity("C2", 2, 0, 0, 0) == 2
    assert oracle_multiplicity("G2", 0, 1, -1, 1) == 1


def test_fundamental_characters():
    assert oracle_character("A2", 1, 0).poly == P(A2_Z1)
    assert oracle_character("C2", 1, 0).poly == P(C2_Z1)
    assert oracle_character("G2", 1, 0).poly == P(G2_Z1)
    assert oracle_character("G2", 0, 1).poly == P(G2_Z2)


def test_c2_labeling_convention():
    """Only the chosen C2 labeling reproduces the tabulated 4-term z1."""
    assert character_for_cartan(CARTAN["C2"], 1, 0) == P(C2_Z1)
    assert character_for_cartan(C2_SWAPPED, 1, 0) != P(C2_Z1)
    # the swapped labeling turns lambda1 into the 5-dimensional representation
    assert character_for_cartan(C2_SWAPPED, 1, 0).evaluate((1, 1)) == 5


def test_custom_cartan_agrees_with_builtin():
    for alg in ALGEBRAS:
        assert character_for_cartan(CARTAN[alg], 2, 1) == oracle_character(alg, 2, 1).poly


@pytest.mark.parametrize("alg", ALGEBRAS)
def test_checksums(alg):
    for p in range(9):
        for q in range(9):
            assert dimension_checksum(alg, p, q) == weyl_dim(alg, p, q)
            assert oracle_character(alg, p, q).dimension() == weyl_dim(alg, p, q)


@pytest.mark.parametrize("alg", ALGEBRAS)
def test_multiplicities_positive(alg):
    for p in range(7):
        for q in range(7):
            assert all(isinstance(v, int) and v > 0 for v in freudenthal_table(alg, p, q).entries.values())


def test_negative_highest_weight():
    with pytest.raises(DomainError):
        freudenthal_table("A2", -1, 0)


def test_adjoint_zero_weight_is_rank():
    assert freudenthal_table("A2", 1, 1)[(0, 0)] == 2
    assert freudenthal_table("C2", 2, 0)[(0, 0)] == 2
    assert freudenthal_table("G2", 0, 1)[(0, 0)] == 2
