"""Rational generating functions and their truncated power-series expansions.

Series variables carry a finite bound in the truncation box; variables whose
bound is ``None`` are passengers: their exponents are kept exactly (they may
be negative) and never truncated, so the coefficients of a passenger series
are effectively Laurent polynomials in those variables.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import comb
from operator import add
from typing import Sequence

from .errors import ContextError, DomainError, NormalizationError, OutOfBoxError
from .poly import ExpVec, LaurentPoly

Box = tuple  # per-variable int bound, or None for an untruncated passenger


def theta(k: int, p: int) -> int:
    """1 if ``p >= 0`` and ``k`` divides ``p``, else 0."""
    if k < 1:
        raise DomainError("theta needs k >= 1")
    return int(p >= 0 and p % k == 0)


def f_binom(s: int, q: int) -> int:
    """binomial(q+s-1, q): coefficient of x^q in (1-x)^(-s)."""
    if s < 1:
        raise DomainError("f_binom needs s >= 1")
    if q < 0:
        raise DomainError("f_binom needs q >= 0")
    return comb(q + s - 1, q)


@dataclass(frozen=True)
class RationalGF:
    """``numerator / prod(factor**mult)`` with every factor normalized to
    constant term +1."""

    numerator: LaurentPoly
    denom_factors: tuple[tuple[LaurentPoly, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "denom_factors", tuple(self.denom_factors))
        for f, k in self.denom_factors:
            if f.varnames != self.numerator.varnames:
                raise ContextError("denominator factor lives in a different context")
            if k < 1:
                raise ValueError("factor multiplicity must be positive")
            if f.constant_term != 1:
                raise NormalizationError(f"factor {f} does not have constant term +1")

    @property
    def varnames(self) -> tuple[str, ...]:
        return self.numerator.varnames

    def denominator(self) -> LaurentPoly:
        """Multiplied-out denominator (only used for cross-checks)."""
        d = LaurentPoly.one(self.varnames)
        for f, k in self.denom_factors:
            d = d * f ** k
        return d

    def substitute(self, images, varnames=None) -> "RationalGF":
        num = self.numerator.substitute(images, varnames)
        return RationalGF(num, tuple((f.substitute(images, num.varnames), k)
                                     for f, k in self.denom_factors))

    def __str__(self) -> str:
        den = " * ".join(f"({f})" + (f"^{k}" if k > 1 else "") for f, k in self.denom_factors)
        return f"({self.numerator}) / ({den or '1'})"


class TruncSeries:
    """Coefficients of a power series on a rectangular exponent box.

    Coefficients outside the box are undefined: asking for one raises
    :class:`OutOfBoxError` instead of returning 0.
    """

    __slots__ = ("varnames", "box", "_coeffs", "_bounded")

    def __init__(self, coeffs: dict[ExpVec, int], box: Sequence[int | None],
                 varnames: Sequence[str]):
        self.varnames = tuple(varnames)
        self.box = tuple(box)
        if len(self.box) != len(self.varnames):
            raise ContextError("box length does not match variables")
        self._bounded = tuple(i for i, b in enumerate(self.box) if b is not None)
        self._coeffs = {e: c for e, c in coeffs.items() if c and self.in_box(e)}

    @classmethod
    def from_poly(cls, p: LaurentPoly, box: Sequence[int | None]) -> "TruncSeries":
        return cls(p.terms, box, p.varnames)

    def in_box(self, e: ExpVec) -> bool:
        box = self.box
        return all(0 <= e[i] <= box[i] for i in self._bounded)

    def coeff(self, e: Sequence[int]) -> int:
        e = tuple(e)
        if len(e) != len(self.box):
            raise ContextError("exponent length does not match variables")
        if not self.in_box(e):
            raise OutOfBoxError(f"exponent {e} outside box {self.box}")
        return self._coeffs.get(e, 0)

    __getitem__ = coeff

    def items(self):
        return self._coeffs.items()

    def __len__(self) -> int:
        return len(self._coeffs)

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly(self._coeffs, self.varnames)

    def _check(self, other: "TruncSeries"):
        if self.varnames != other.varnames or self.box != other.box:
            raise ContextError("series live on different boxes")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.varnames, self.box, self._coeffs) == (other.varnames, other.box, other._coeffs)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return TruncSeries(out, self.box, self.varnames)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries({e: -c for e, c in self._coeffs.items()}, self.box, self.varnames)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        out: dict[ExpVec, int] = defaultdict(int)
        box, bounded = self.box, self._bounded
        for ea, ca in self._coeffs.items():
            for eb, cb in other._coeffs.items():
                e = tuple(map(add, ea, eb))
                if all(e[i] <= box[i] for i in bounded):
                    out[e] += ca * cb
        return TruncSeries(out, box, self.varnames)

    def restrict(self, box: Sequence[int | None]) -> "TruncSeries":
        box = tuple(box)
        for b, c in zip(box, self.box):
            if (c is None) != (b is None) or (b is not None and b > c):
                raise OutOfBoxError(f"box {box} is not contained in {self.box}")
        return TruncSeries(self._coeffs, box, self.varnames)

    def slice(self, fixed: dict[str, int]) -> "TruncSeries":
        """Coefficient series obtained by fixing some bounded exponents."""
        fix = {self.varnames.index(v): k for v, k in fixed.items()}
        for i, k in fix.items():
            if self.box[i] is None or not 0 <= k <= self.box[i]:
                raise OutOfBoxError(f"{self.varnames[i]}^{k} outside box {self.box}")
        keep = [i for i in range(len(self.box)) if i not in fix]
        out = {}
        for e, c in self._coeffs.items():
            if all(e[i] == k for i, k in fix.items()):
                out[tuple(e[i] for i in keep)] = c
        return TruncSeries(out, [self.box[i] for i in keep], [self.varnames[i] for i in keep])

    def __repr__(self) -> str:
        return f"TruncSeries(box={self.box}, vars={self.varnames}, nterms={len(self._coeffs)})"


def _grade(e: ExpVec, bounded: Sequence[int]) -> int:
    return sum(e[i] for i in bounded)


def _divide_by_factor(levels: dict[int, dict[ExpVec, int]], factor: LaurentPoly,
                      box: Box, bounded: Sequence[int], top: int) -> dict[int, dict[ExpVec, int]]:
    """Series division by a factor 1 - g, graded by total bounded degree.

    out = s + g*out, solved level by level; this is the truncated geometric
    series sum_j g^j applied to s.
    """
    zero = (0,) * len(box)
    g = [(u, -c, _grade(u, bounded)) for u, c in factor.items() if u != zero]
    out: dict[int, dict[ExpVec, int]] = {}
    for level in range(top + 1):
        cur = dict(levels.get(level, ()))
        for u, c, d in g:
            src = out.get(level - d)
            if not src:
                continue
            for k, v in src.items():
                e = tuple(map(add, k, u))
                if all(e[i] <= box[i] for i in bounded):
                    cur[e] = cur.get(e, 0) + c * v
        cur = {e: c for e, c in cur.items() if c}
        if cur:
            out[level] = cur
    return out


def gf_expand(f: RationalGF, box: Sequence[int | None]) -> TruncSeries:
    """Exact Taylor coefficients of ``f`` at the origin on ``box``.

    Every non-constant term of every denominator factor must have
    nonnegative bounded exponents of positive total degree, so that the
    geometric expansion converges in the bounded variables.
    """
    box = tuple(box)
    varnames = f.varnames
    if len(box) != len(varnames):
        raise ContextError("box length does not match variables")
    bounded = tuple(i for i, b in enumerate(box) if b is not None)
    if not bounded:
        raise ValueError("at least one variable must be bounded")
    zero = (0,) * len(box)
    for fac, _ in f.denom_factors:
        if fac.constant_term != 1:
            raise NormalizationError(f"factor {fac} does not have constant term +1")
        for u, _c in fac.items():
            if u == zero:
                continue
            if any(u[i] < 0 for i in bounded) or _grade(u, bounded) == 0:
                raise NormalizationError(
                    f"factor {fac} has a non-constant term of zero or negative series degree")
    for e, _c in f.numerator.items():
        if any(e[i] < 0 for i in bounded):
            raise NormalizationError("numerator has negative exponents in a series variable")
    top = sum(box[i] for i in bounded)
    levels: dict[int, dict[ExpVec, int]] = defaultdict(dict)
    for e, c in f.numerator.items():
        if all(e[i] <= box[i] for i in bounded):
            levels[_grade(e, bounded)][e] = c
    for fac, mult in f.denom_factors:
        for _ in range(mult):
            levels = _divide_by_factor(levels, fac, box, bounded, top)
    coeffs = {}
    for lv in levels.values():
        coeffs.update(lv)
    return TruncSeries(coeffs, box, varnames)


def series_coeff(s: TruncSeries, e: Sequence[int]) -> int:
    return s.coeff(e)


def theta_f_expand(r: int, k: int, s: int, order: int) -> TruncSeries:
    """Series of x^r / (1 - x^k)^s via its closed-form coefficients."""
    if r < 0 or k < 1 or s < 1 or order < 0:
        raise DomainError("need r >= 0, k >= 1, s >= 1, order >= 0")
    coeffs = {}
    for p in range(order + 1):
        if theta(k, p - r):
            coeffs[(p,)] = f_binom(s, (p - r) // k)
    return TruncSeries(coeffs, (order,), ("x",))
