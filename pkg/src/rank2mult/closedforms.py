"""Closed-form multiplicity formulas for dominant weights with m + n <= 4.

Each algebra's formulas live in a declarative table keyed by (m, n) so the
entries can be audited line by line.  Delta corrections are written as
``(coeff, p_value, q_value)`` meaning ``coeff * delta(p, p_value) *
delta(q, q_value)``, with ``None`` standing for "no condition".

The G2 block is evaluated in exact rationals and must come out integral.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, InternalConsistencyError, UnsupportedFormulaError
from .liecore import resolve_algebra
from .series import RationalGF, TruncSeries, f_binom, gf_expand, theta  # noqa: F401
from .poly import LaurentPoly

Delta = tuple[int, "int | None", "int | None"]


def _point_deltas(terms: tuple[Delta, ...], p: int, q: int) -> int:
    total = 0
    for c, a, b in terms:
        if (a is None or p == a) and (b is None or q == b):
            total += c
    return total


def delta(a: int, b: int) -> int:
    return int(a == b)


# ---------------------------------------------------------------- A2

def F_A2(p: int, q: int, s: int) -> int:
    return (1 + q) * theta(3, p - q + s) + (1 + p) * theta(3, q - p - s)


# (m, n) -> (s, c, diagonal deltas, point deltas)
# value = F(s) - (c + q) delta(p+s, q) + sum k*delta(p+dp, q+dq) + point deltas
A2_TABLE: dict[tuple[int, int], tuple] = {
    (0, 0): (0, 1, (), ()),
    (1, 0): (2, 1, (), ()),
    (2, 0): (1, 2, (), ()),
    (1, 1): (0, 2, (), ()),
    (3, 0): (0, 3, ((-1, 3, 0),), ((1, 0, 0),)),
    (2, 1): (2, 2, ((-1, 0, 1),), ()),
    (4, 0): (2, 3, ((-2, 0, 1), (-1, 5, 0)), ((1, 1, 0), (1, 0, 2))),
    (3, 1): (1, 3, ((-1, 0, 2), (-1, 4, 0)), ((1, 0, 1),)),
    (2, 2): (0, 3, ((-1, 3, 0), (-1, 0, 3)), ((1, 0, 0),)),
}


def _mu_A2_listed(p: int, q: int, m: int, n: int) -> int:
    s, c, diag, points = A2_TABLE[(m, n)]
    value = F_A2(p, q, s) - (c + q) * delta(p + s, q)
    value += sum(k * delta(p + dp, q + dq) for k, dp, dq in diag)
    value += _point_deltas(points, p, q)
    return value


def _mu_A2(p: int, q: int, m: int, n: int) -> int:
    if (m, n) in A2_TABLE:
        return _mu_A2_listed(p, q, m, n)
    # Dynkin diagram symmetry
    return _mu_A2_listed(q, p, n, m)


def a2_min_form(p: int, q: int, s: int) -> tuple[int, int]:
    """Both sides of F(s) - (1+q) delta(p+s, q) = (min(p,q)+1) theta3(|p-q+s|)."""
    lhs = F_A2(p, q, s) - (1 + q) * delta(p + s, q)
    rhs = (min(p, q) + 1) * theta(3, abs(p - q + s))
    return lhs, rhs


# ---------------------------------------------------------------- C2

# (m, n) -> (parity shift a, constant, theta2(q) coeff, delta_q0 coeff,
#            delta_q1 coeff, outer point deltas)
# value = 1/2 theta2(p - a) (M + const + e theta2(q) + d0 delta(q,0) + d1 delta(q,1))
#         + outer deltas,   M = (p+1)(q+1)
C2_TABLE: dict[tuple[int, int], tuple] = {
    (0, 0): (0, 0, 1, 0, 0, ()),
    (1, 0): (1, 0, 0, 0, 0, ()),
    (0, 1): (0, 0, -1, 0, 0, ()),
    (2, 0): (0, -2, 1, 0, 0, ()),
    (1, 1): (1, -2, 0, 0, 0, ()),
    (0, 2): (0, -4, 1, 0, 0, ((1, 0, None),)),
    (3, 0): (1, -4, 0, 2, 0, ()),
    (2, 1): (0, -4, -1, 2, 0, ((1, 0, None),)),
    (1, 2): (1, -6, 0, 2, 0, ((1, 1, None),)),
    (0, 3): (0, -8, -1, 4, 0, ((3, 0, None), (1, 2, None), (-1, 0, 0))),
    (4, 0): (0, -8, 1, 4, 2, ((2, 0, None), (-1, 0, 0))),
    (3, 1): (1, -8, 0, 4, 2, ((1, 1, None),)),
    (2, 2): (0, -10, 1, 4, 2, ((3, 0, None), (1, 2, None), (-1, 0, 0))),
    (1, 3): (1, -12, 0, 6, 2, ((3, 1, None), (1, 3, None), (-1, 1, 0))),
    (0, 4): (0, -16, 1, 8, 4, ((6, 0, None), (3, 2, None), (1, 4, None),
                               (-3, 0, 0), (-1, 0, 1), (-1, 2, 0))),
}


def _mu_C2(p: int, q: int, m: int, n: int) -> int:
    a, const, e, d0, d1, outer = C2_TABLE[(m, n)]
    M = (p + 1) * (q + 1)
    inner = theta(2, p - a) * (M + const + e * theta(2, q) + d0 * delta(q, 0) + d1 * delta(q, 1))
    if inner % 2:
        raise InternalConsistencyError(f"C2 formula ({m},{n}) not integral at ({p},{q})")
    return inner // 2 + _point_deltas(outer, p, q)


# ---------------------------------------------------------------- G2

def F_G2(p: int, q: int, r, s, t) -> Fraction:
    """The affine-in-(r, s, t) building block of every G2 formula."""
    return (Fraction((p + 1) * (q + 1), 72) * (r + 2 * p * p + 6 * q * q + 9 * p * q + 13 * p + 21 * q)
            + Fraction(s, 9) * (q + 1) * (theta(3, p) - theta(3, p - 1))
            + Fraction(t, 8) * theta(2, p) * theta(2, q))


# (m, n) -> ((r, s, t), constant, point deltas)
G2_TABLE: dict[tuple[int, int], tuple] = {
    (0, 0): ((29, 2, 3), 0, ()),
    (1, 0): ((17, -1, -1), 0, ()),
    (0, 1): ((-7, 2, -1), 0, ()),
    (2, 0): ((-19, -1, 3), 0, ()),
    (1, 1): ((-55, -1, -1), 1, ()),
    (0, 2): ((-115, 2, 3), 4, ((-2, 0, None), (-1, None, 0))),
    (3, 0): ((-79, 2, -1), 2, ((-1, 0, None),)),
    (2, 1): ((-127, -1, -1), 5, ((-1, 1, None), (-2, 0, None), (-1, None, 0))),
    (1, 2): ((-199, -1, -1), 12, ((-1, 2, None), (-3, 1, None), (-6, 0, None),
                                  (-1, None, 1), (-4, None, 0), (1, 0, 0))),
    (0, 3): ((-295, 2, -1), 26, ((-2, 3, None), (-4, 2, None), (-8, 1, None), (-16, 0, None),
                                 (-1, None, 2), (-4, None, 1), (1, 0, 1),
                                 (-11, None, 0), (1, 1, 0), (5, 0, 0))),
    (4, 0): ((-163, -1, 3), 8, ((-1, 2, None), (-2, 1, None), (-4, 0, None), (-2, None, 0))),
    (3, 1): ((-223, 2, -1), 15, ((-1, 3, None), (-2, 2, None), (-4, 1, None), (-9, 0, None),
                                 (-1, None, 1), (-5, None, 0), (2, 0, 0))),
    (2, 2): ((-307, -1, 3), 28, ((-1, 4, None), (-2, 3, None), (-5, 2, None), (-10, 1, None),
                                 (-17, 0, None), (-1, None, 2),
                                 (1, 0, 1), (-4, None, 1),
                                 (2, 1, 0), (5, 0, 0), (-12, None, 0))),
    (1, 3): ((-415, -1, -1), 51, ((-1, 5, None), (-3, 4, None), (-6, 3, None), (-12, 2, None),
                                  (-21, 1, None), (-1, None, 3),
                                  (1, 0, 2), (-33, 0, None),
                                  (-4, None, 2),
                                  (1, 1, 1), (4, 0, 1), (-11, None, 1),
                                  (2, 2, 0), (6, 1, 0), (13, 0, 0), (-25, None, 0))),
    (0, 4): ((-547, 2, 3), 88, ((-2, 6, None), (-4, 5, None), (-8, 4, None), (-16, 3, None),
                                (-26, 2, None), (-40, 1, None), (-1, None, 4), (-4, None, 3),
                                (1, 0, 3), (-62, 0, None),
                                (1, 1, 2), (4, 0, 2), (-11, None, 2),
                                (1, 2, 1), (4, 1, 1), (12, 0, 1), (-24, None, 1),
                                (3, 3, 0), (7, 2, 0), (15, 1, 0), (29, 0, 0), (-48, None, 0))),
}


def _mu_G2(p: int, q: int, m: int, n: int) -> int:
    rst, const, points = G2_TABLE[(m, n)]
    value = F_G2(p, q, *rst) + const + _point_deltas(points, p, q)
    if value.denominator != 1:
        raise InternalConsistencyError(f"G2 formula ({m},{n}) gives {value} at ({p},{q})")
    return int(value)


_DISPATCH = {"A2": _mu_A2, "C2": _mu_C2, "G2": _mu_G2}


def mu_closed(alg: str, p: int, q: int, m: int, n: int) -> int:
    """Closed-form multiplicity of the dominant weight (m, n) in R_(p,q)."""
    alg = resolve_algebra(alg)
    if min(p, q, m, n) < 0:
        raise DomainError("closed forms need p, q, m, n >= 0")
    if m + n > 4:
        raise UnsupportedFormulaError(f"no closed form for ({m}, {n}); m + n must be <= 4")
    return _DISPATCH[alg](p, q, m, n)


FORMULA_KEYS = tuple((m, k - m) for k in range(5) for m in range(k, -1, -1))


# ---------------------------------------------------------------- F-tilde

_T = ("t1", "t2")


def _p(text: str) -> LaurentPoly:
    return LaurentPoly.parse(text, _T)


def f_tilde_parts() -> dict[str, tuple[RationalGF, callable]]:
    """72 * F-tilde split into its r, s, t and free parts, each paired with
    the corresponding 72 * F_{p,q} component as an (p, q) -> int function."""
    a, b = _p("1 - t1"), _p("1 - t2")
    free_num = 6 * _p("9*t1^2*t2 - 3*t1^2 + 5*t1*t2^2 - 22*t1*t2 + 5*t1 - 3*t2^2 + 9*t2")
    return {
        "r": (RationalGF(_p("1"), ((a, 2), (b, 2))),
              lambda p, q: (p + 1) * (q + 1)),
        "free": (RationalGF(free_num, ((a, 4), (b, 4))),
                 lambda p, q: (p + 1) * (q + 1) * (2 * p * p + 6 * q * q + 9 * p * q + 13 * p + 21 * q)),
        # 8 s (1-t1^2)(1+t2) over the common denominator; the shared factors cancel
        "s": (RationalGF(8 * _p("1 - t1^2") * _p("1 + t2"),
                         ((_p("1 - t1^2"), 1), (_p("1 + t1 + t1^2"), 1), (b, 2), (_p("1 + t2"), 1))),
              lambda p, q: 8 * (q + 1) * (theta(3, p) - theta(3, p - 1))),
        "t": (RationalGF(9 * _p("1 + t1 + t1^2") * b,
                         ((_p("1 - t1^2"), 1), (_p("1 + t1 + t1^2"), 1), (b, 2), (_p("1 + t2"), 1))),
              lambda p, q: 9 * theta(2, p) * theta(2, q)),
    }


def F_G2_gf_check(order: int) -> dict:
    """Compare the F-tilde expansion with F_{p,q}(r,s,t) as affine functions."""
    if order < 0:
        raise DomainError("order must be >= 0")
    results = {}
    first_failure = None
    for name, (gf, expected) in f_tilde_parts().items():
        ser = gf_expand(gf, (order, order))
        ok = True
        for p in range(order + 1):
            for q in range(order + 1):
                got = ser.coeff((p, q))
                if got != expected(p, q):
                    ok = False
                    if first_failure is None:
                        first_failure = {"part": name, "p": p, "q": q,
                                         "series": got, "formula": expected(p, q)}
        results[name] = ok
    # the four parts reassemble the function: check basis evaluations directly
    for rst in ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)):
        for p in range(order + 1):
            for q in range(order + 1):
                direct = 72 * F_G2(p, q, *rst)
                parts = _affine_value(p, q, rst)
                if direct != parts:
                    results["basis"] = False
    results.setdefault("basis", True)
    return {"name": "F-tilde", "order": order, "passed": all(results.values()),
            "parts": results, "first_failure": first_failure}


def _affine_value(p: int, q: int, rst) -> int:
    r, s, t = rst
    parts = f_tilde_parts()
    return (r * parts["r"][1](p, q) + parts["free"][1](p, q)
            + s * parts["s"][1](p, q) + t * parts["t"][1](p, q))
