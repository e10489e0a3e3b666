"""Sparse multivariate Laurent polynomials with arbitrary-precision integer
coefficients.

A polynomial is a map from exponent tuples (negative entries allowed) to
nonzero ints, tied to an ordered tuple of variable names.  Values are
immutable; every operation returns a new polynomial.
"""
from __future__ import annotations

import re
from fractions import Fraction
from operator import add
from typing import Iterable, Mapping, Sequence

from .errors import ContextError, DomainError

ExpVec = tuple[int, ...]


class LaurentPoly:
    __slots__ = ("_terms", "_varnames", "_hash")

    def __init__(self, terms: Mapping[ExpVec, int] | Iterable[tuple[ExpVec, int]],
                 varnames: Sequence[str]):
        varnames = tuple(varnames)
        n = len(varnames)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[ExpVec, int] = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != n:
                raise ContextError(f"exponent {e} does not match variables {varnames}")
            if c:
                clean[e] = clean.get(e, 0) + c
        self._terms = {e: c for e, c in clean.items() if c}
        self._varnames = varnames
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[ExpVec, int], varnames: tuple[str, ...]) -> "LaurentPoly":
        # trusted constructor: terms already pruned and well-formed
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._varnames = varnames
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, varnames: Sequence[str]) -> "LaurentPoly":
        return cls._raw({}, tuple(varnames))

    @classmethod
    def constant(cls, c: int, varnames: Sequence[str]) -> "LaurentPoly":
        varnames = tuple(varnames)
        return cls._raw({(0,) * len(varnames): c} if c else {}, varnames)

    @classmethod
    def one(cls, varnames: Sequence[str]) -> "LaurentPoly":
        return cls.constant(1, varnames)

    @classmethod
    def monomial(cls, exp: Sequence[int], varnames: Sequence[str], coeff: int = 1) -> "LaurentPoly":
        return cls({tuple(exp): coeff}, varnames)

    @classmethod
    def var(cls, name: str, varnames: Sequence[str]) -> "LaurentPoly":
        varnames = tuple(varnames)
        i = varnames.index(name)
        return cls._raw({tuple(int(j == i) for j in range(len(varnames))): 1}, varnames)

    @classmethod
    def gens(cls, varnames: Sequence[str]) -> tuple["LaurentPoly", ...]:
        return tuple(cls.var(v, varnames) for v in varnames)

    # basic accessors

    @property
    def terms(self) -> dict[ExpVec, int]:
        return dict(self._terms)

    @property
    def varnames(self) -> tuple[str, ...]:
        return self._varnames

    @property
    def nvars(self) -> int:
        return len(self._varnames)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    @property
    def constant_term(self) -> int:
        return self._terms.get((0,) * self.nvars, 0)

    def _index(self, var: int | str) -> int:
        if isinstance(var, str):
            return self._varnames.index(var)
        if not 0 <= var < self.nvars:
            raise ContextError(f"variable index {var} out of range")
        return var

    def degree(self, var: int | str) -> int:
        i = self._index(var)
        return max((e[i] for e in self._terms), default=0)

    def min_degree(self, var: int | str) -> int:
        i = self._index(var)
        return min((e[i] for e in self._terms), default=0)

    # ring structure

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other._varnames != self._varnames:
                raise ContextError(f"variable contexts differ: {self._varnames} vs {other._varnames}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self._varnames)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self._varnames)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._varnames == other._varnames and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._varnames, frozenset(self._terms.items())))
        return self._hash

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()}, self._varnames)

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out, self._varnames)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return LaurentPoly.zero(self._varnames)
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()}, self._varnames)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[ExpVec, int] = {}
        get = out.get
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple(map(add, ea, eb))
                out[e] = get(e, 0) + ca * cb
        return LaurentPoly._raw({e: c for e, c in out.items() if c}, self._varnames)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) != 1:
                raise DomainError("only monomials can be raised to negative powers")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise DomainError("monomial with non-unit coefficient is not invertible")
            return LaurentPoly._raw({tuple(n * x for x in e): c ** (-n)}, self._varnames)
        result = LaurentPoly.one(self._varnames)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, exp: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``exp``."""
        exp = tuple(exp)
        return LaurentPoly._raw({tuple(map(add, e, exp)): c for e, c in self._terms.items()},
                                self._varnames)

    # calculus and substitution

    def diff(self, var: int | str, order: int = 1) -> "LaurentPoly":
        """Formal partial derivative; Laurent exponents are handled termwise."""
        i = self._index(var)
        terms = self._terms
        for _ in range(order):
            out = {}
            for e, c in terms.items():
                k = e[i]
                if k:
                    out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
            terms = out
        return LaurentPoly._raw(terms, self._varnames)

    def substitute(self, images: Mapping[str, "LaurentPoly | int"],
                   varnames: Sequence[str] | None = None) -> "LaurentPoly":
        """Ring homomorphism sending each named variable to ``images[name]``.

        Variables without an image must appear in the target context
        ``varnames`` (default: the context shared by the images).
        """
        if varnames is None:
            ctx = {p.varnames for p in images.values() if isinstance(p, LaurentPoly)}
            if len(ctx) != 1:
                raise ContextError("cannot infer target variable context")
            varnames = ctx.pop()
        varnames = tuple(varnames)
        one = LaurentPoly.one(varnames)
        img = []
        for name in self._varnames:
            if name in images:
                p = images[name]
                img.append(p if isinstance(p, LaurentPoly) else LaurentPoly.constant(p, varnames))
            elif name in varnames:
                img.append(LaurentPoly.var(name, varnames))
            else:
                raise ContextError(f"no image for variable {name!r}")
        for p in img:
            if p.varnames != varnames:
                raise ContextError("image lives in a different context")
        cache: list[dict[int, LaurentPoly]] = [{0: one} for _ in img]

        def power(i: int, k: int) -> LaurentPoly:
            c = cache[i]
            if k not in c:
                if k > 0:
                    c[k] = power(i, k - 1) * img[i]
                else:
                    c[k] = img[i] ** k
            return c[k]

        out: dict[ExpVec, int] = {}
        for e, c in self._terms.items():
            term = LaurentPoly.constant(c, varnames)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            for te, tc in term._terms.items():
                out[te] = out.get(te, 0) + tc
        return LaurentPoly._raw({e: c for e, c in out.items() if c}, varnames)

    def evaluate(self, values: Mapping[str, int | Fraction] | Sequence[int | Fraction]):
        if isinstance(values, Mapping):
            values = [values[v] for v in self._varnames]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for x, k in zip(values, e):
                term *= Fraction(x) ** k
            total += term
        return int(total) if total.denominator == 1 else total

    def embed(self, varnames: Sequence[str]) -> "LaurentPoly":
        """Re-express in a larger context containing all current variables."""
        varnames = tuple(varnames)
        idx = [varnames.index(v) for v in self._varnames]
        out = {}
        for e, c in self._terms.items():
            new = [0] * len(varnames)
            for j, k in zip(idx, e):
                new[j] = k
            out[tuple(new)] = c
        return LaurentPoly._raw(out, varnames)

    # text form

    def render(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e in sorted(self._terms):
            c = self._terms[e]
            mono = "*".join(v if k == 1 else f"{v}^{k}"
                            for v, k in zip(self._varnames, e) if k)
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}"
            pieces.append(s)
        out = pieces[0]
        for s in pieces[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    __str__ = render

    def __repr__(self) -> str:
        return f"LaurentPoly({self.render()!r}, {self._varnames!r})"

    @classmethod
    def parse(cls, text: str, varnames: Sequence[str]) -> "LaurentPoly":
        """Inverse of :meth:`render` (also accepts an explicit leading ``+``)."""
        varnames = tuple(varnames)
        index = {v: i for i, v in enumerate(varnames)}
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        # split at +/- that do not follow '^'
        chunks = re.split(r"(?<!\^)(?=[+-])", s)
        terms: dict[ExpVec, int] = {}
        for chunk in chunks:
            if not chunk:
                continue
            sign = -1 if chunk[0] == "-" else 1
            body = chunk[1:] if chunk[0] in "+-" else chunk
            coeff = 1
            exp = [0] * len(varnames)
            for j, factor in enumerate(body.split("*")):
                if not factor:
                    raise ValueError(f"malformed term {chunk!r}")
                if factor.isdigit():
                    if j:
                        raise ValueError(f"coefficient must lead the term: {chunk!r}")
                    coeff = int(factor)
                    continue
                name, _, k = factor.partition("^")
                if name not in index:
                    raise ValueError(f"unknown variable {name!r}")
                exp[index[name]] += int(k) if k else 1
            e = tuple(exp)
            terms[e] = terms.get(e, 0) + sign * coeff
        return cls(terms, varnames)


def poly_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if a.varnames != b.varnames:
        raise ContextError(f"variable contexts differ: {a.varnames} vs {b.varnames}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def poly_diff(p: LaurentPoly, var: int | str) -> LaurentPoly:
    return p.diff(var)
