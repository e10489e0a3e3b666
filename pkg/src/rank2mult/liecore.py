"""Root systems, Weyl groups and the Weyl dimension formula for A2, C2, G2.

All weights are written in fundamental-weight (Dynkin label) coordinates.
Simple root i is row i of the Cartan matrix, with
``cartan[i][j] = <alpha_i, alpha_j^vee>``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm, prod

from .errors import DomainError, InternalConsistencyError, UnknownAlgebraError

ALGEBRAS = ("A2", "C2", "G2")
ALIASES = {"B2": "C2"}

Weight = tuple[int, int]
Matrix = tuple[tuple[int, int], tuple[int, int]]

# Row convention.  For G2 this is the transpose of the matrix as it is often
# tabulated; it is the unique choice giving lambda1 = 2a1 + a2, lambda2 = 3a1 + 2a2.
# C2 labels the 4-dimensional representation as lambda1 (a1 short).
CARTAN: dict[str, Matrix] = {
    "A2": ((2, -1), (-1, 2)),
    "C2": ((2, -1), (-2, 2)),
    "G2": ((2, -1), (-3, 2)),
}
# the alternative C2 labeling, kept for the convention test
C2_SWAPPED: Matrix = ((2, -2), (-1, 2))


def resolve_algebra(name: str) -> str:
    key = str(name).strip().upper()
    key = ALIASES.get(key, key)
    if key not in ALGEBRAS:
        raise UnknownAlgebraError(f"unknown algebra {name!r}; expected one of A2, B2, C2, G2")
    return key


@dataclass(frozen=True)
class RootSystem:
    name: str
    cartan: Matrix
    simple_roots: tuple[Weight, Weight]
    positive_roots: tuple[Weight, ...]
    # <lambda_i, lambda_j>, long roots of squared length 2
    form: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
    # form scaled to the smallest integer matrix; Freudenthal is scale-invariant
    int_form: Matrix
    rho: Weight = (1, 1)

    def inner(self, a: Weight, b: Weight) -> Fraction:
        f = self.form
        return (a[0] * (f[0][0] * b[0] + f[0][1] * b[1])
                + a[1] * (f[1][0] * b[0] + f[1][1] * b[1]))

    def int_inner(self, a: Weight, b: Weight) -> int:
        f = self.int_form
        return (a[0] * (f[0][0] * b[0] + f[0][1] * b[1])
                + a[1] * (f[1][0] * b[0] + f[1][1] * b[1]))

    def root_coords(self, w: Weight) -> tuple[Fraction, Fraction]:
        """Coordinates of ``w`` in the simple-root basis."""
        (a, b), (c, d) = self.cartan
        det = a * d - b * c
        # w = x*row0 + y*row1
        x = Fraction(w[0] * d - w[1] * c, det)
        y = Fraction(w[1] * a - w[0] * b, det)
        return x, y


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
                 for i in range(2))


def act(g: Matrix, w: Weight) -> Weight:
    return (g[0][0] * w[0] + g[0][1] * w[1], g[1][0] * w[0] + g[1][1] * w[1])


def reflection_matrix(cartan: Matrix, i: int) -> Matrix:
    # s_i(w)_j = w_j - w_i * A_ij
    return tuple(tuple(int(j == k) - int(k == i) * cartan[i][j] for k in range(2))
                 for j in range(2))


def _generate_group(cartan: Matrix) -> tuple[Matrix, ...]:
    gens = [reflection_matrix(cartan, 0), reflection_matrix(cartan, 1)]
    identity = ((1, 0), (0, 1))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = _matmul(s, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return tuple(sorted(seen))


def _positive_roots(cartan: Matrix, group) -> tuple[Weight, ...]:
    simple = (tuple(cartan[0]), tuple(cartan[1]))
    roots = {act(g, a) for g in group for a in simple}
    (a, b), (c, d) = cartan
    det = a * d - b * c
    pos = []
    for r in roots:
        x = Fraction(r[0] * d - r[1] * c, det)
        y = Fraction(r[1] * a - r[0] * b, det)
        if x >= 0 and y >= 0:
            pos.append((x + y, r))
    return tuple(r for _, r in sorted(pos))


def build_root_system(name: str, cartan: Matrix) -> RootSystem:
    group = _generate_group(cartan)
    simple = (tuple(cartan[0]), tuple(cartan[1]))
    # symmetrizer: d_i = |alpha_i|^2 / 2 with A_ij d_j = A_ji d_i
    ratio = Fraction(cartan[0][1], cartan[1][0])  # d0/d1
    d = [ratio, Fraction(1)] if ratio <= 1 else [Fraction(1), 1 / ratio]
    (a, b), (c, e) = cartan
    det = a * e - b * c
    inv = ((Fraction(e, det), Fraction(-b, det)), (Fraction(-c, det), Fraction(a, det)))
    form = tuple(tuple(inv[i][j] * d[j] for j in range(2)) for i in range(2))
    if form[0][1] != form[1][0]:
        raise InternalConsistencyError(f"non-symmetric form for {name}")
    scale = lcm(*(x.denominator for row in form for x in row))
    int_form = tuple(tuple(int(x * scale) for x in row) for row in form)
    return RootSystem(name, cartan, simple, _positive_roots(cartan, group), form, int_form)


@lru_cache(maxsize=None)
def root_system(alg: str) -> RootSystem:
    alg = resolve_algebra(alg)
    return build_root_system(alg, CARTAN[alg])


@lru_cache(maxsize=None)
def weyl_group(alg: str) -> tuple[Matrix, ...]:
    """All Weyl group elements as integer matrices acting on Dynkin labels."""
    return _generate_group(CARTAN[resolve_algebra(alg)])


def orbit(alg: str, w: Weight) -> frozenset[Weight]:
    return frozenset(act(g, tuple(w)) for g in weyl_group(alg))


def dominant_representative(alg: str, w: Weight) -> Weight:
    return dominant_for_cartan(CARTAN[resolve_algebra(alg)], w)


def dominant_for_cartan(cartan: Matrix, w: Weight) -> Weight:
    """Reflect ``w`` into the dominant chamber by simple reflections."""
    m, n = w
    while m < 0 or n < 0:
        if m < 0:
            m, n = m - m * cartan[0][0], n - m * cartan[0][1]
        else:
            m, n = m - n * cartan[1][0], n - n * cartan[1][1]
    return (m, n)


def is_dominant(w: Weight) -> bool:
    return w[0] >= 0 and w[1] >= 0


def weyl_dim(alg: str, p: int, q: int) -> int:
    """Dimension of the irreducible representation with highest weight (p, q)."""
    if p < 0 or q < 0:
        raise DomainError(f"highest weight ({p}, {q}) is not dominant")
    rs = root_system(alg)
    lr = (p + 1, q + 1)
    num = prod(rs.int_inner(lr, a) for a in rs.positive_roots)
    den = prod(rs.int_inner(rs.rho, a) for a in rs.positive_roots)
    if num % den:
        raise InternalConsistencyError(f"non-integral dimension for {alg} ({p}, {q})")
    return num // den


def g2_dim_polynomial(p: int, q: int) -> int:
    """The explicit sextic for G2 dimensions."""
    num = (p + 1) * (q + 1) * (p + q + 2) * (p + 2 * q + 3) * (p + 3 * q + 4) * (2 * p + 3 * q + 5)
    if num % 120:
        raise InternalConsistencyError("G2 dimension polynomial not integral")
    return num // 120


def dominant_weight_bounds(alg: str, p: int, q: int) -> tuple[int, int]:
    """Upper bounds on the labels (m, n) of dominant weights of R_(p,q).

    Uses <mu, mu> <= <lambda, lambda> for dominant mu below lambda.
    """
    rs = root_system(alg)
    top = rs.int_inner((p, q), (p, q))
    f = rs.int_form

    def bound(c: int) -> int:
        k = 0
        while c * (k + 1) ** 2 <= top:
            k += 1
        return k

    return bound(f[0][0]), bound(f[1][1])
