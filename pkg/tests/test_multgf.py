import pytest

from rank2mult.errors import DomainError
from rank2mult.freudenthal import freudenthal_table
from rank2mult.multgf import (G2_Y_DEGREES, HVARS, a_series, b_poly, build_H, g_coefficients,
                              load_numerator_G2, mult_from_H, parse_numerator_file,
                              reconstruct_H_numerator_G2, render_numerator_file, verify_numerator_G2)
from rank2mult.poly import LaurentPoly


@pytest.fixture(scope="module")
def reconstruction():
    return reconstruct_H_numerator_G2()


def test_point_values():
    assert mult_from_H("A2", 1, 1, 0, 0) == 2
    assert mult_from_H("C2", 1, 0, 1, 0) == 1
    assert mult_from_H("C2", 2, 0, 0, 0) == 2
    assert mult_from_H("B2", 2, 0, 0, 0) == 2


def test_non_dominant_rejected():
    with pytest.raises(DomainError):
        mult_from_H("A2", 1, 1, -1, 2)


def test_G2_build_refused():
    with pytest.raises(DomainError):
        build_H("G2")


def test_enlarge_on_demand():
    assert mult_from_H("A2", 14, 13, 6, 5) == freudenthal_table("A2", 14, 13)[(6, 5)]


def test_a_series():
    ser = a_series("A2", 0, 0, 4)
    assert ser.coeff((1, 1)) == 2 and ser.coeff((0, 0)) == 1
    assert a_series("C2", 0, 1, 3).coeff((0, 1)) == 1


def test_b_poly():
    y = ("y1", "y2")
    assert b_poly("A2", 1, 1).poly == LaurentPoly.parse("y1*y2 + 2", y)
    assert b_poly("C2", 0, 1).poly == LaurentPoly.parse("y2 + 1", y)
    for alg in ("A2", "C2", "G2"):
        assert b_poly(alg, 0, 0).poly == LaurentPoly.one(y)


@pytest.mark.parametrize("alg", ["A2", "C2", "G2"])
def test_b_poly_is_full_table(alg):
    for p in range(5):
        for q in range(5):
            table = freudenthal_table(alg, p, q)
            assert dict(b_poly(alg, p, q).poly.terms) == dict(table.entries)


@pytest.mark.parametrize("alg", ["A2", "C2"])
def test_h_matches_oracle(alg):
    for p in range(11):
        for q in range(11):
            table = freudenthal_table(alg, p, q)
            for m in range(7):
                for n in range(7 - m):
                    assert mult_from_H(alg, p, q, m, n) == table[(m, n)], (p, q, m, n)


@pytest.mark.parametrize("alg", ["A2", "C2", "G2"])
def test_y_zero_specialization(alg):
    """H at y = 0 is the zero-weight series, i.e. A_{0,0}."""
    a00 = a_series(alg, 0, 0, 10)
    for p in range(11):
        for q in range(11):
            assert a00.coeff((p, q)) == freudenthal_table(alg, p, q)[(0, 0)]


def test_reconstruction_shape(reconstruction):
    mg, report = reconstruction
    num = mg.gf.numerator
    assert num.degree("y1") <= 5 and num.degree("y2") <= 3
    assert set(g_coefficients(num)) <= {(r, s) for r in range(6) for s in range(4)}
    assert num.coeff((0, 0, 0, 0)) == 1
    assert report.verification_passed
    assert all(r < v for r, v in zip(report.reconstruction_box, report.verification_box))


def test_shipped_file_matches_fresh_reconstruction(reconstruction):
    mg, _ = reconstruction
    assert load_numerator_G2() == mg.gf.numerator


def test_numerator_file_roundtrip(reconstruction):
    num = reconstruction[0].gf.numerator
    text = render_numerator_file(num)
    assert text.count("# g[") == (G2_Y_DEGREES[0] + 1) * (G2_Y_DEGREES[1] + 1) == 24
    assert parse_numerator_file(text) == num


def test_corrupted_numerator_detected(reconstruction):
    num = reconstruction[0].gf.numerator
    bad = num + LaurentPoly.monomial((3, 2, 1, 1), HVARS)
    ok, mismatch = verify_numerator_G2(bad, (6, 6, 3, 3))
    assert not ok and mismatch is not None


def test_bad_guess():
    with pytest.raises(DomainError):
        reconstruct_H_numerator_G2(0)


@pytest.mark.slow
def test_small_guess_retries():
    mg, report = reconstruct_H_numerator_G2(t_degree_guess=10)
    assert report.attempts[0] == 10 and len(report.attempts) > 1
    assert report.verification_passed
    assert mg.gf.numerator == load_numerator_G2()
