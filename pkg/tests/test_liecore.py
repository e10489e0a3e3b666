import pytest
from hypothesis import given
from hypothesis import strategies as st

from rank2mult.errors import DomainError, UnknownAlgebraError
from rank2mult.liecore import (ALGEBRAS, act, dominant_representative, g2_dim_polynomial, is_dominant,
                               orbit, resolve_algebra, root_system, weyl_dim, weyl_group)

weights = st.tuples(st.integers(-8, 8), st.integers(-8, 8))
algs = st.sampled_from(ALGEBRAS)


@pytest.mark.parametrize("alg,order", [("A2", 6), ("C2", 8), ("G2", 12)])
def test_group_orders(alg, order):
    assert len(weyl_group(alg)) == order


@pytest.mark.parametrize("alg,count", [("A2", 3), ("C2", 4), ("G2", 6)])
def test_positive_root_counts(alg, count):
    assert len(root_system(alg).positive_roots) == count


def test_alias_and_unknown():
    assert resolve_algebra("b2") == "C2"
    with pytest.raises(UnknownAlgebraError):
        resolve_algebra("E8")


def test_g2_fundamental_orbits():
    assert orbit("G2", (1, 0)) == {(1, 0), (-1, 0), (2, -1), (-2, 1), (1, -1), (-1, 1)}
    assert orbit("G2", (0, 1)) == {(0, 1), (0, -1), (3, -1), (-3, 1), (3, -2), (-3, 2)}


def test_g2_fundamental_weights_in_root_basis():
    rs = root_system("G2")
    assert rs.root_coords((1, 0)) == (2, 1)
    assert rs.root_coords((0, 1)) == (3, 2)


@given(algs)
def test_zero_is_fixed(alg):
    assert orbit(alg, (0, 0)) == {(0, 0)}


@given(algs, weights)
def test_orbit_size_divides_group_order(alg, w):
    assert len(weyl_group(alg)) % len(orbit(alg, w)) == 0


@given(algs, weights)
def test_dominant_representative(alg, w):
    d = dominant_representative(alg, w)
    assert is_dominant(d)
    assert d in orbit(alg, w)
    assert [v for v in orbit(alg, w) if is_dominant(v)] == [d]


@given(algs, weights)
def test_form_is_weyl_invariant(alg, w):
    rs = root_system(alg)
    for g in weyl_group(alg):
        assert rs.inner(act(g, w), act(g, w)) == rs.inner(w, w)


def test_dominant_examples():
    assert dominant_representative("A2", (-1, 2)) == (1, 1)
    assert dominant_representative("C2", (3, 1)) == (3, 1)
    assert dominant_representative("G2", (1, -1)) == (1, 0)


def test_weyl_dims():
    assert weyl_dim("G2", 1, 0) == 7 and weyl_dim("G2", 0, 1) == 14
    assert [weyl_dim(a, 0, 0) for a in ALGEBRAS] == [1, 1, 1]
    assert weyl_dim("A2", 1, 1) == 8 and weyl_dim("C2", 1, 0) == 4 and weyl_dim("C2", 0, 1) == 5
    assert weyl_dim("C2", 2, 0) == 10
    with pytest.raises(DomainError):
        weyl_dim("A2", -1, 0)


def test_g2_sextic():
    for p in range(21):
        for q in range(21):
            assert weyl_dim("G2", p, q) == g2_dim_polynomial(p, q)


def test_a2_dims_closed_form():
    for p in range(15):
        for q in range(15):
            assert weyl_dim("A2", p, q) == (p + 1) * (q + 1) * (p + q + 2) // 2
