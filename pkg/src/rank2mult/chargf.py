"""Character generating functions G(t1, t2; z1, z2) and the G2 structural
checks built on them (Clebsch-Gordan series, the Calogero-Sutherland
differential equation, the dimension generating function E).

G is kept in two forms.  The z-form is rational in (t1, t2, z1, z2) exactly
as tabulated.  The x-form has the fundamental characters substituted; x1, x2
are then Laurent passengers of the t-expansion.  Characters are extracted
from the z-form (small coefficients) and pushed through the substitution,
which is a ring homomorphism and so commutes with the t-expansion; the
x-form expansion is kept as an independent cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .freudenthal import XVARS, Character, oracle_character
from .liecore import resolve_algebra, weyl_dim
from .poly import LaurentPoly
from .series import RationalGF, gf_expand

ZVARS = ("t1", "t2", "z1", "z2")
TXVARS = ("t1", "t2", "x1", "x2")


def _z(text: str) -> LaurentPoly:
    return LaurentPoly.parse(text, ZVARS)


def _x(text: str) -> LaurentPoly:
    return LaurentPoly.parse(text, XVARS)


# Fundamental characters as tabulated, x-variables only.
Z_DECOMPOSITION: dict[str, tuple[str, str]] = {
    "A2": ("x1 + x2^-1 + x1^-1*x2",
           "x2 + x1^-1 + x1*x2^-1"),
    "C2": ("x1 + x1^-1 + x1*x2^-1 + x1^-1*x2",
           "1 + x2 + x2^-1 + x1^2*x2^-1 + x1^-2*x2"),
    "G2": ("1 + x1 + x1^-1 + x1*x2^-1 + x1^-1*x2 + x1^2*x2^-1 + x1^-2*x2",
           "2 + x1 + x1^-1 + x2 + x2^-1 + x1*x2^-1 + x1^-1*x2 + x1^2*x2^-1 + x1^-2*x2"
           " + x1^3*x2^-1 + x1^-3*x2 + x1^3*x2^-2 + x1^-3*x2^2"),
}


def z_decomposition(alg: str) -> tuple[LaurentPoly, LaurentPoly]:
    a, b = Z_DECOMPOSITION[resolve_algebra(alg)]
    return _x(a), _x(b)


# G2 numerator and denominator factors
G2_N = (
    "1 + t1 + t1^4*t2 + t2^3 + t1^3*t2^4 + t1^4*t2^4",
    "(1 - z1)*(t1^3*t2 + t1*t2^3)",
    "(1 + z1)*(t2 + t2^2 + t1^4*t2^2 + t1^4*t2^3)",
    "(1 + z1 - z1^2)*(t1*t2^2 + t1^3*t2^2)",
    "(1 + z2)*(t1^2*t2 + t1^2*t2^3)",
    "(2 + z1 - z1^2 + z2)*(t1*t2 + t1^3*t2^3)",
    "(1 + 2*z1 - z1^2 + z2 + z1*z2)*t1^2*t2^2",
)


def _product_expr(expr: str) -> LaurentPoly:
    # "(a)*(b)" with polynomial factors, or a plain polynomial
    if not expr.startswith("("):
        return _z(expr)
    out = LaurentPoly.one(ZVARS)
    for piece in expr.split(")*"):
        piece = piece.strip("()*")
        out = out * _z(piece)
    return out


def g2_numerator() -> LaurentPoly:
    total = LaurentPoly.zero(ZVARS)
    for chunk in G2_N:
        total = total + _product_expr(chunk)
    return total


def g2_denominator_factors() -> tuple[LaurentPoly, LaurentPoly]:
    t1, t2, z1, z2 = LaurentPoly.gens(ZVARS)
    d1 = (1 + t1 ** 6 + (t1 + t1 ** 5) * (1 - z1) + (t1 ** 2 + t1 ** 4) * (1 + z2)
          + t1 ** 3 * (1 - z1 ** 2 + 2 * z2))
    d2 = (1 + t2 ** 6 + (t2 + t2 ** 5) * (1 + z1 - z2)
          + (t2 ** 2 + t2 ** 4) * (1 - z1 + z1 ** 3 - 2 * z2 - 3 * z1 * z2)
          + t2 ** 3 * (1 - 2 * z1 - z1 ** 2 + 2 * z1 ** 3 - 4 * z2 - 4 * z1 * z2 - z2 ** 2))
    return d1, d2


def g_zform(alg: str) -> RationalGF:
    alg = resolve_algebra(alg)
    t1, t2, z1, z2 = LaurentPoly.gens(ZVARS)
    if alg == "A2":
        return RationalGF(1 - t1 * t2,
                          ((1 - t1 * z1 + t1 ** 2 * z2 - t1 ** 3, 1),
                           (1 - t2 * z2 + t2 ** 2 * z1 - t2 ** 3, 1)))
    if alg == "C2":
        num = 1 + t2 - z1 * t1 * t2 + t1 ** 2 * t2 + t1 ** 2 * t2 ** 2
        f1 = 1 - (t1 + t1 ** 3) * z1 + t1 ** 2 * (z2 + 1) + t1 ** 4
        f2 = 1 - (t2 + t2 ** 3) * (z2 - 1) + t2 ** 2 * (z1 ** 2 - 2 * z2) + t2 ** 4
        return RationalGF(num, ((f1, 1), (f2, 1)))
    d1, d2 = g2_denominator_factors()
    return RationalGF(g2_numerator(), ((d1, 1), (d2, 1)))


@dataclass(frozen=True)
class CharGF:
    alg: str
    zform: RationalGF
    gf: RationalGF  # in (t1, t2, x1, x2), x Laurent


def _x_images(alg: str) -> dict[str, LaurentPoly]:
    z1, z2 = z_decomposition(alg)
    return {"t1": LaurentPoly.var("t1", TXVARS), "t2": LaurentPoly.var("t2", TXVARS),
            "z1": z1.embed(TXVARS), "z2": z2.embed(TXVARS)}


@lru_cache(maxsize=None)
def build_G(alg: str) -> CharGF:
    alg = resolve_algebra(alg)
    zf = g_zform(alg)
    return CharGF(alg, zf, zf.substitute(_x_images(alg), TXVARS))


@lru_cache(maxsize=None)
def _zform_series(alg: str, pmax: int, qmax: int):
    return gf_expand(build_G(alg).zform, (pmax, qmax, None, None))


def character_zpolys(alg: str, pmax: int, qmax: int) -> dict[tuple[int, int], LaurentPoly]:
    """Characters as polynomials in the fundamental characters z1, z2."""
    alg = resolve_algebra(alg)
    ser = _zform_series(alg, pmax, qmax)
    buckets: dict[tuple[int, int], dict] = {}
    for (p, q, a, b), c in ser.items():
        if p <= pmax and q <= qmax:
            buckets.setdefault((p, q), {})[(a, b)] = c
    return {(p, q): LaurentPoly(buckets.get((p, q), {}), ("z1", "z2"))
            for p in range(pmax + 1) for q in range(qmax + 1)}


def characters_from_G(alg: str, pmax: int, qmax: int, route: str = "z") -> dict[tuple[int, int], Character]:
    """Characters chi_{p,q}(x1, x2) read off the series of G.

    ``route="z"`` expands in (t, z) and substitutes afterwards;
    ``route="x"`` expands the substituted function with x as passengers.
    """
    alg = resolve_algebra(alg)
    if route == "x":
        ser = gf_expand(build_G(alg).gf, (pmax, qmax, None, None))
        buckets: dict[tuple[int, int], dict] = {}
        for (p, q, a, b), c in ser.items():
            buckets.setdefault((p, q), {})[(a, b)] = c
        return {(p, q): Character(alg, (p, q), LaurentPoly(buckets.get((p, q), {}), XVARS))
                for p in range(pmax + 1) for q in range(qmax + 1)}
    if route != "z":
        raise ValueError(f"unknown route {route!r}")
    z1, z2 = z_decomposition(alg)
    images = {"z1": z1, "z2": z2}
    return {pq: Character(alg, pq, poly.substitute(images, XVARS))
            for pq, poly in character_zpolys(alg, pmax, qmax).items()}


def _record(name: str, passed: bool, **detail) -> dict:
    rec = {"name": name, "passed": bool(passed)}
    rec.update(detail)
    return rec


def verify_cg_series_G2() -> list[dict]:
    """The four standard G2 tensor-product identities and the three quadratic
    characters they determine, as exact Laurent identities."""
    chi = {pq: oracle_character("G2", *pq).poly for pq in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0)]}
    z1, z2, one = chi[(1, 0)], chi[(0, 1)], chi[(0, 0)]
    checks = [
        ("z1^2 = chi20 + z1 + z2 + 1", z1 * z1, chi[(2, 0)] + z1 + z2 + one),
        ("z1*z2 = chi11 + chi20 + z1", z1 * z2, chi[(1, 1)] + chi[(2, 0)] + z1),
        ("z2^2 = chi02 + chi30 + chi20 + z2 + 1", z2 * z2,
         chi[(0, 2)] + chi[(3, 0)] + chi[(2, 0)] + z2 + one),
        ("z1*chi20 = chi30 + chi11 + chi20 + z1 + z2", z1 * chi[(2, 0)],
         chi[(3, 0)] + chi[(1, 1)] + chi[(2, 0)] + z1 + z2),
        ("chi20 = z1^2 - z2 - z1 - 1", chi[(2, 0)], z1 * z1 - z2 - z1 - one),
        ("chi11 = z1*z2 - z1^2 + z2 + 1", chi[(1, 1)], z1 * z2 - z1 * z1 + z2 + one),
        ("chi02 = z2^2 - z1^3 + 2*z1*z2 + z2 + 2*z1", chi[(0, 2)],
         z2 * z2 - z1 ** 3 + 2 * z1 * z2 + z2 + 2 * z1),
    ]
    out = []
    for name, lhs, rhs in checks:
        diff = lhs - rhs
        out.append(_record(name, diff.is_zero(),
                           residual=None if diff.is_zero() else diff.render()))
    return out


# ---------------------------------------------------------------- operators

class DiffOp:
    """Linear differential operator sum coeff * d^alpha."""

    def __init__(self, terms: Sequence[tuple[LaurentPoly, tuple[int, ...]]]):
        self.terms = tuple(terms)
        ctx = {c.varnames for c, _ in self.terms}
        if len(ctx) != 1:
            raise ValueError("operator coefficients must share one context")
        self.varnames = ctx.pop()

    def __call__(self, f: LaurentPoly) -> LaurentPoly:
        out = LaurentPoly.zero(self.varnames)
        for coeff, alpha in self.terms:
            g = f
            for i, k in enumerate(alpha):
                if k:
                    g = g.diff(i, k)
            if g:
                out = out + coeff * g
        return out

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return DiffOp(self.terms + tuple((-c, a) for c, a in other.terms))

    def apply_to_quotient(self, num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
        """Numerator of op(num/den) over den^3 (operators of order <= 2)."""
        out = LaurentPoly.zero(self.varnames)
        d2 = den * den
        for coeff, alpha in self.terms:
            idx = [i for i, k in enumerate(alpha) for _ in range(k)]
            if not idx:
                out = out + coeff * num * d2
            elif len(idx) == 1:
                i, = idx
                out = out + coeff * (num.diff(i) * den - num * den.diff(i)) * den
            elif len(idx) == 2:
                i, j = idx
                ni, nj, di, dj = num.diff(i), num.diff(j), den.diff(i), den.diff(j)
                nij, dij = ni.diff(j), di.diff(j)
                out = out + coeff * (nij * d2 - (ni * dj + nj * di) * den
                                     - num * dij * den + 2 * num * di * dj)
            else:
                raise ValueError("only operators of order <= 2 are supported")
        return out


def delta_t() -> DiffOp:
    t1, t2, _, _ = LaurentPoly.gens(ZVARS)
    return DiffOp([
        (4 * t1 ** 2, (2, 0, 0, 0)),
        (12 * t2 ** 2, (0, 2, 0, 0)),
        (12 * t1 * t2, (1, 1, 0, 0)),
        (24 * t1, (1, 0, 0, 0)),
        (48 * t2, (0, 1, 0, 0)),
    ])


def delta_z() -> DiffOp:
    _, _, z1, z2 = LaurentPoly.gens(ZVARS)
    return DiffOp([
        (4 * (z1 ** 2 - z2 - 4 * z1 - 7), (0, 0, 2, 0)),
        (4 * (3 * z2 ** 2 - 3 * z1 ** 3 + 6 * z1 * z2 - 5 * z1 ** 2 + 2 * z2 + 11 * z1 - 7), (0, 0, 0, 2)),
        (4 * (3 * z1 * z2 - 7 * z1 ** 2 + 7 * z2 - 8 * z1 + 7), (0, 0, 1, 1)),
        (24 * z1, (0, 0, 1, 0)),
        (48 * z2, (0, 0, 0, 1)),
    ])


def g2_eigenvalue(p: int, q: int) -> int:
    return 4 * p * p + 12 * q * q + 12 * p * q + 20 * p + 36 * q


def verify_pde_G2(order: int = 8, full: bool = False) -> dict:
    """Check (Delta_t - Delta_z) G = 0 for G2.

    Truncated mode expands G in t1, t2 (z symbolic) and checks every
    coefficient with p + q <= order; both operators preserve t-degree, so
    the truncation is exact.  Full mode clears denominators via the
    quotient rule and checks the resulting numerator is the zero polynomial.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    op = delta_t() - delta_z()
    zf = build_G("G2").zform
    if full:
        residual = op.apply_to_quotient(zf.numerator, zf.denominator())
        return _record("pde-g2/full", residual.is_zero(), terms_checked=None,
                       residual_terms=len(residual))
    ser = gf_expand(zf, (order, order, None, None))
    poly = LaurentPoly({e: c for e, c in ser.items() if e[0] + e[1] <= order}, ZVARS)
    image = op(poly)
    slots = set(e for e, _ in poly.items()) | set(e for e, _ in image.items())
    bad = sorted(e for e, _ in image.items() if e[0] + e[1] <= order)
    first = None
    if bad:
        first = {"exponent": list(bad[0]), "value": image.coeff(bad[0])}
    return _record("pde-g2", not bad, order=order, coefficients_checked=len(slots),
                   first_failure=first)


P_E = ("1 + t1 + 8*t2 - 26*t1*t2 + 15*t1^2*t2 - 6*t1^3*t2 + t1^4*t2 + 8*t2^2"
       " - 41*t1*t2^2 + 78*t1^2*t2^2 - 41*t1^3*t2^2 + 8*t1^4*t2^2 + t2^3 - 6*t1*t2^3"
       " + 15*t1^2*t2^3 - 26*t1^3*t2^3 + 8*t1^4*t2^3 + t1^3*t2^4 + t1^4*t2^4")

TVARS = ("t1", "t2")


def dimension_gf(alg: str) -> RationalGF:
    """G with z1, z2 replaced by the fundamental dimensions."""
    alg = resolve_algebra(alg)
    images = {"z1": weyl_dim(alg, 1, 0), "z2": weyl_dim(alg, 0, 1),
              "t1": LaurentPoly.var("t1", TVARS), "t2": LaurentPoly.var("t2", TVARS)}
    return g_zform(alg).substitute(images, TVARS)


def e_generating_function() -> RationalGF:
    t1, t2 = LaurentPoly.gens(TVARS)
    return RationalGF(LaurentPoly.parse(P_E, TVARS), ((1 - t1, 6), (1 - t2, 6)))


def dimension_gf_E(bound: int = 10) -> list[dict]:
    """E = P/((1-t1)^6 (1-t2)^6): cross-multiplied identity plus a
    coefficient comparison with Weyl dimensions."""
    g = dimension_gf("G2")
    e = e_generating_function()
    cross = g.numerator * e.denominator() - e.numerator * g.denominator()
    ser = gf_expand(e, (bound, bound))
    bad = [(p, q) for p in range(bound + 1) for q in range(bound + 1)
           if ser.coeff((p, q)) != weyl_dim("G2", p, q)]
    return [
        _record("E cross-multiplication", cross.is_zero(),
                residual_terms=len(cross)),
        _record("E coefficients = dim", not bad, bound=bound,
                first_failure=list(bad[0]) if bad else None),
    ]


def dimension_specialization_check(alg: str, bound: int = 10) -> dict:
    ser = gf_expand(dimension_gf(alg), (bound, bound))
    bad = [(p, q) for p in range(bound + 1) for q in range(bound + 1)
           if ser.coeff((p, q)) != weyl_dim(alg, p, q)]
    return _record(f"dim-gf/{resolve_algebra(alg)}", not bad, bound=bound,
                   first_failure=list(bad[0]) if bad else None)
