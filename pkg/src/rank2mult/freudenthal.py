"""Freudenthal recursion: the ground-truth multiplicities every other method
is checked against."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .errors import DomainError, InternalConsistencyError
from .liecore import (Matrix, Weight, _generate_group, act, build_root_system, dominant_for_cartan,
                      dominant_representative, orbit, resolve_algebra, root_system)
from .poly import LaurentPoly

XVARS = ("x1", "x2")


@dataclass(frozen=True)
class MultTable:
    alg: str
    hw: Weight
    entries: Mapping[Weight, int] = field(repr=False)

    def __getitem__(self, w: Weight) -> int:
        return self.entries.get(tuple(w), 0)

    def dominant_weights(self) -> list[Weight]:
        return sorted(self.entries, reverse=True)


@dataclass(frozen=True)
class Character:
    alg: str
    hw: Weight
    poly: LaurentPoly

    def dimension(self) -> int:
        return self.poly.evaluate((1, 1))


def _dominant_below(rs, p: int, q: int) -> list[tuple[int, Weight]]:
    """Dominant weights mu with lambda - mu in the positive root cone,
    tagged by depth (sum of simple-root coordinates of lambda - mu)."""
    (a, b), (c, d) = rs.cartan
    cx, cy = rs.root_coords((p, q))
    out = []
    for i in range(int(cx) + 1):
        for j in range(int(cy) + 1):
            m = p - i * a - j * c
            n = q - i * b - j * d
            if m >= 0 and n >= 0:
                out.append((i + j, (m, n)))
    out.sort()
    return out


@lru_cache(maxsize=None)
def _table(alg: str, p: int, q: int) -> MultTable:
    return MultTable(alg, (p, q), MappingProxyType(_recursion(root_system(alg), p, q)))


def _recursion(rs, p: int, q: int) -> dict[Weight, int]:
    ip = rs.int_inner
    lam = (p, q)
    lr = (p + 1, q + 1)
    norm_top = ip(lr, lr)
    pos = rs.positive_roots
    mult: dict[Weight, int] = {}
    dom_cache: dict[Weight, Weight] = {}

    def m_of(w: Weight) -> int:
        dw = dom_cache.get(w)
        if dw is None:
            dw = dom_cache[w] = dominant_for_cartan(rs.cartan, w)
        return mult.get(dw, 0)

    for depth, mu in _dominant_below(rs, p, q):
        if mu == lam:
            mult[mu] = 1
            continue
        mr = (mu[0] + 1, mu[1] + 1)
        lhs = norm_top - ip(mr, mr)
        total = 0
        for alpha in pos:
            k = 1
            while True:
                w = (mu[0] + k * alpha[0], mu[1] + k * alpha[1])
                mw = m_of(w)
                if not mw:
                    break
                total += mw * ip(w, alpha)
                k += 1
        total *= 2
        if lhs <= 0 or total % lhs:
            raise InternalConsistencyError(
                f"inexact Freudenthal step for {rs.name} {lam} at {mu}: {total}/{lhs}")
        value = total // lhs
        if value:
            mult[mu] = value
    return mult


def freudenthal_table(alg: str, p: int, q: int) -> MultTable:
    """Multiplicities of all dominant weights of R_(p,q)."""
    alg = resolve_algebra(alg)
    if p < 0 or q < 0:
        raise DomainError(f"highest weight ({p}, {q}) is not dominant")
    return _table(alg, int(p), int(q))


def oracle_multiplicity(alg: str, p: int, q: int, m: int, n: int) -> int:
    table = freudenthal_table(alg, p, q)
    return table[dominant_representative(table.alg, (m, n))]


def oracle_character(alg: str, p: int, q: int) -> Character:
    table = freudenthal_table(alg, p, q)
    terms = {}
    for w, c in table.entries.items():
        for v in orbit(table.alg, w):
            terms[v] = c
    return Character(table.alg, (p, q), LaurentPoly(terms, XVARS))


def character_for_cartan(cartan: Matrix, p: int, q: int) -> LaurentPoly:
    """Character of R_(p,q) for an arbitrary rank-two Cartan matrix (used to
    test labeling conventions against tabulated fundamental characters)."""
    rs = build_root_system("custom", cartan)
    group = _generate_group(cartan)
    terms = {}
    for w, c in _recursion(rs, p, q).items():
        for g in group:
            terms[act(g, w)] = c
    return LaurentPoly(terms, XVARS)


def dimension_checksum(alg: str, p: int, q: int) -> int:
    """sum over dominant weights of multiplicity * orbit size."""
    table = freudenthal_table(alg, p, q)
    return sum(c * len(orbit(table.alg, w)) for w, c in table.entries.items())
