from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rank2mult.chargf import e_generating_function
from rank2mult.crossval import brute_force_series
from rank2mult.errors import DomainError, NormalizationError, OutOfBoxError
from rank2mult.poly import LaurentPoly
from rank2mult.series import RationalGF, TruncSeries, f_binom, gf_expand, series_coeff, theta, theta_f_expand

TV = ("t1", "t2")
T1, T2 = LaurentPoly.gens(TV)
X = LaurentPoly.var("x", ("x",))


def test_geometric():
    ser = gf_expand(RationalGF(LaurentPoly.one(("x",)), ((1 - X, 1),)), (5,))
    assert [ser.coeff((i,)) for i in range(6)] == [1] * 6


def test_hand_expansion():
    f = RationalGF(1 - T1 * T2, ((1 - T1, 1), (1 - T2, 1)))
    ser = gf_expand(f, (3, 3))
    # sum of all t1^a t2^b minus its (1, 1)-shift: only the two axes survive
    assert ser.coeff((1, 1)) == 0
    assert ser.coeff((0, 0)) == 1
    assert ser.coeff((3, 0)) == 1 and ser.coeff((0, 2)) == 1
    assert ser.coeff((3, 2)) == 0


def test_spec_coefficients():
    ser = gf_expand(RationalGF(LaurentPoly.one(TV), ((1 - T1, 1), (1 - T2, 1))), (2, 2))
    assert series_coeff(ser, (0, 0)) == 1
    ser = gf_expand(RationalGF(LaurentPoly.one(("x",)), ((1 - X, 2),)), (5,))
    assert ser.coeff((3,)) == 4


def test_E_low_coefficients():
    ser = gf_expand(e_generating_function(), (2, 2))
    assert ser.coeff((0, 0)) == 1
    assert ser.coeff((1, 0)) == 7
    assert ser.coeff((0, 1)) == 14


def test_out_of_box_raises():
    ser = gf_expand(RationalGF(LaurentPoly.one(TV), ((1 - T1, 1),)), (2, 2))
    with pytest.raises(OutOfBoxError):
        ser.coeff((3, 0))
    with pytest.raises(OutOfBoxError):
        ser.coeff((-1, 0))
    with pytest.raises(OutOfBoxError):
        ser.restrict((3, 2))


def test_normalization_errors():
    with pytest.raises(NormalizationError):
        RationalGF(LaurentPoly.one(TV), ((2 - T1, 1),))
    with pytest.raises(NormalizationError):
        gf_expand(RationalGF(LaurentPoly.one(TV), ((1 - T1 * T2 ** -1, 1),)), (3, 3))


@given(st.integers(0, 3), st.integers(0, 3), st.integers(1, 3))
@settings(max_examples=30, deadline=None)
def test_reconstruction_identity(a, b, mult):
    """(N/D) * D equals N on the box."""
    den = (1 - T1 ** (a + 1) * T2 ** b, mult)
    num = 1 + 3 * T1 * T2 - T2 ** 2
    box = (6, 6)
    ser = gf_expand(RationalGF(num, (den,)), box)
    back = ser * TruncSeries.from_poly(den[0] ** den[1], box)
    assert back == TruncSeries.from_poly(num, box)


def test_passenger_variable():
    """A None box entry carries Laurent exponents through untouched."""
    vs = ("t", "z")
    t, z = LaurentPoly.gens(vs)
    f = RationalGF(LaurentPoly.one(vs), ((1 - t * (z + z ** -1), 1),))
    ser = gf_expand(f, (3, None))
    assert ser.slice({"t": 2}).to_poly() == LaurentPoly.parse("z^-2 + 2 + z^2", ("z",))


def test_theta():
    assert theta(3, 6) == 1 and theta(3, -3) == 0 and theta(2, 5) == 0


def test_f_binom():
    assert f_binom(1, 7) == 1 and f_binom(2, 3) == 4 and f_binom(3, 2) == 6
    with pytest.raises(DomainError):
        f_binom(2, -1)


def test_theta_f_examples():
    assert [theta_f_expand(0, 1, 1, 4).coeff((i,)) for i in range(5)] == [1] * 5
    assert theta_f_expand(2, 3, 2, 10).coeff((8,)) == 3
    assert theta_f_expand(1, 2, 1, 6).coeff((4,)) == 0


@given(st.integers(0, 6), st.integers(1, 6), st.integers(1, 6))
@settings(max_examples=40, deadline=None)
def test_theta_f_matches_gf_expand(r, k, s):
    f = RationalGF(X ** r, ((1 - X ** k, s),))
    assert theta_f_expand(r, k, s, 60) == gf_expand(f, (60,))
    assert theta_f_expand(r, k, s, 60) == brute_force_series(r, k, s, 60)


def test_f_binom_is_binomial():
    for s in range(1, 6):
        for q in range(10):
            assert f_binom(s, q) == comb(q + s - 1, s - 1)
