"""Multiplicity generating functions H(t1, t2; y1, y2).

The coefficient of t1^p t2^q y1^m y2^n is the multiplicity of the dominant
weight (m, n) in R_(p,q).  A2 and C2 use known closed-form numerators; for G2 only
the denominator is known, and the numerator is recovered as the
polynomial part of H*D with H filled in from the Freudenthal oracle.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from importlib import resources
from typing import Sequence

from .errors import (DomainError, NonStabilizationError, OutOfBoxError,
                     ReconstructionError)
from .freudenthal import freudenthal_table
from .liecore import dominant_weight_bounds, is_dominant, resolve_algebra
from .poly import LaurentPoly
from .series import RationalGF, TruncSeries, gf_expand

HVARS = ("t1", "t2", "y1", "y2")
TVARS = ("t1", "t2")
G2_Y_DEGREES = (5, 3)
NUMERATOR_FILE = "numerator_hg2.txt"


def _h(text: str) -> LaurentPoly:
    return LaurentPoly.parse(text, HVARS)


@dataclass(frozen=True)
class MultGF:
    alg: str
    gf: RationalGF


@dataclass(frozen=True)
class BPoly:
    alg: str
    hw: tuple[int, int]
    poly: LaurentPoly  # in y1, y2

    def __getitem__(self, w) -> int:
        return self.poly.coeff(w)


A2_COEFFS = {
    (0, 0): "1 + t1*t2 + t1^2*t2^2",
    (1, 0): "-t1*t2^2*(t1^2 + t2 + t1*t2^2)",
    (0, 1): "-t1^2*t2*(t1 + t1^2*t2 + t2^2)",
    (1, 1): "-t1^2*t2^2*(1 - t1^3 - t1*t2 - t1^2*t2^2 - t2^3)",
}
A2_DENOM = ("1 - t1^3", "1 - t2^3", "1 - t1*t2", "1 - t1*y1", "1 - t2^2*y1",
            "1 - t1^2*y2", "1 - t2*y2")

C2_COEFFS = {
    (0, 0): "1 + t1^2*t2",
    (1, 0): "t1*t2*(1 - t1^2)",
    (0, 1): "-t1*t2*(t1^3 + t1*t2)",
    (1, 1): "t1*t2*(t1^4 - t1^2)",
    (2, 0): "-t1^2*t2^2*(1 + t2)",
    (2, 1): "t1^2*t2^2*(t1^2 + t1^2*t2 + t2^2 - 1)",
}
C2_DENOM = ("1 - t1^2", "1 - t1^2", "1 - t2^2", "1 - t2", "1 - t1*y1", "1 - t2^2*y1^2",
            "1 - t1^2*y2", "1 - t2*y2")

G2_DENOM = ("1 - t1", "1 - t1", "1 - t1^2", "1 - t1^3", "1 - t2", "1 - t2", "1 - t2",
            "1 - t2^2", "1 - t1*y1", "1 - t1^2*y1", "1 - t2*y1", "1 - t2^2*y1^3",
            "1 - t1^2*y2", "1 - t1^3*y2", "1 - t2*y2", "1 - t2^2*y2")


def _coeff_expr(text: str) -> LaurentPoly:
    # "monomial*(polynomial)" or plain polynomial
    if "(" not in text:
        return _h(text)
    head, _, rest = text.partition("(")
    head = head.rstrip("*")
    out = _h(rest.rstrip(")"))
    if head in ("", "+"):
        return out
    if head == "-":
        return -out
    return _h(head) * out


def _factors(texts: Sequence[str]) -> tuple[tuple[LaurentPoly, int], ...]:
    counts: dict[str, int] = {}
    for t in texts:
        counts[t] = counts.get(t, 0) + 1
    return tuple((_h(t), k) for t, k in counts.items())


def y_numerator(coeffs: dict[tuple[int, int], LaurentPoly]) -> LaurentPoly:
    total = LaurentPoly.zero(HVARS)
    for (r, s), g in coeffs.items():
        total = total + g.shift((0, 0, r, s))
    return total


def build_H(alg: str) -> MultGF:
    """The closed-form H for A2 or C2."""
    alg = resolve_algebra(alg)
    if alg == "G2":
        raise DomainError("the G2 numerator has no closed form; use reconstruct_H_numerator_G2()")
    coeffs, denom = (A2_COEFFS, A2_DENOM) if alg == "A2" else (C2_COEFFS, C2_DENOM)
    num = y_numerator({k: _coeff_expr(v) for k, v in coeffs.items()})
    return MultGF(alg, RationalGF(num, _factors(denom)))


def g2_denominator() -> tuple[tuple[LaurentPoly, int], ...]:
    return _factors(G2_DENOM)


# ---------------------------------------------------------------- G2 numerator

def _mul_binomials(coeffs: dict, factors, box) -> dict:
    """Multiply a truncated series by each factor in turn (all bounded)."""
    for fac, mult in factors:
        terms = list(fac.items())
        for _ in range(mult):
            out: dict = {}
            for u, c in terms:
                for e, v in coeffs.items():
                    k = (e[0] + u[0], e[1] + u[1], e[2] + u[2], e[3] + u[3])
                    if k[0] <= box[0] and k[1] <= box[1] and k[2] <= box[2] and k[3] <= box[3]:
                        out[k] = out.get(k, 0) + c * v
            coeffs = {e: v for e, v in out.items() if v}
    return coeffs


def oracle_h_series(alg: str, box: Sequence[int]) -> TruncSeries:
    """H on ``box`` filled in from Freudenthal tables."""
    alg = resolve_algebra(alg)
    P, Q, M, N = box
    coeffs = {}
    for p in range(P + 1):
        for q in range(Q + 1):
            for (m, n), c in freudenthal_table(alg, p, q).entries.items():
                if m <= M and n <= N:
                    coeffs[(p, q, m, n)] = c
    return TruncSeries(coeffs, tuple(box), HVARS)


@dataclass
class ReconstructionReport:
    t_degree_guess: int
    reconstruction_box: tuple[int, int, int, int]
    verification_box: tuple[int, int, int, int]
    t_degrees: tuple[int, int]
    y_degrees: tuple[int, int]
    nonzero_slots: int
    verification_passed: bool
    attempts: list[int] = field(default_factory=list)
    first_mismatch: list | None = None

    def as_dict(self) -> dict:
        return {
            "t_degree_guess": self.t_degree_guess,
            "attempts": list(self.attempts),
            "reconstruction_box": list(self.reconstruction_box),
            "verification_box": list(self.verification_box),
            "t_degrees": list(self.t_degrees),
            "y_degrees": list(self.y_degrees),
            "slots": (G2_Y_DEGREES[0] + 1) * (G2_Y_DEGREES[1] + 1),
            "nonzero_slots": self.nonzero_slots,
            "verification_passed": self.verification_passed,
            "first_mismatch": self.first_mismatch,
        }


def _reconstruct_once(guess: int, margin: int) -> LaurentPoly:
    ymax = (G2_Y_DEGREES[0] + margin, G2_Y_DEGREES[1] + margin)
    box = (guess + margin, guess + margin) + ymax
    h = oracle_h_series("G2", box)
    coeffs = _mul_binomials(dict(h.items()), g2_denominator(), box)
    for e in coeffs:
        if e[2] > G2_Y_DEGREES[0] or e[3] > G2_Y_DEGREES[1]:
            raise ReconstructionError(
                f"numerator has y-exponent {e[2:]} beyond (5, 3); denominator transcription suspect")
    for e in coeffs:
        if e[0] > guess or e[1] > guess:
            raise NonStabilizationError(f"nonzero numerator coefficient at {e} beyond guess {guess}")
    return LaurentPoly(coeffs, HVARS)


def verify_numerator_G2(num: LaurentPoly, box: Sequence[int]) -> tuple[bool, list | None]:
    """Re-expand N/D on ``box`` and compare with the oracle."""
    box = tuple(box)
    ser = gf_expand(RationalGF(num, g2_denominator()), box)
    ref = oracle_h_series("G2", box)
    if ser == ref:
        return True, None
    for e in sorted(set(k for k, _ in ser.items()) | set(k for k, _ in ref.items())):
        if ser.coeff(e) != ref.coeff(e):
            return False, [list(e), ser.coeff(e), ref.coeff(e)]
    return False, None


def reconstruct_H_numerator_G2(t_degree_guess: int = 14, margin: int = 2,
                               max_guess: int = 40) -> tuple[MultGF, ReconstructionReport]:
    """Recover the G2 numerator sum g_{r,s}(t1,t2) y1^r y2^s.

    Retries with a larger t-degree guess while the truncated product has
    not stabilized; a y-degree violation is a hard failure.
    """
    if t_degree_guess < 1:
        raise DomainError("t_degree_guess must be >= 1")
    attempts = []
    guess = t_degree_guess
    while True:
        attempts.append(guess)
        try:
            num = _reconstruct_once(guess, margin)
            break
        except NonStabilizationError:
            if guess >= max_guess:
                raise
            guess += 4
    rbox = (guess + margin, guess + margin,
            G2_Y_DEGREES[0] + margin, G2_Y_DEGREES[1] + margin)
    vbox = tuple(b + 2 for b in rbox)
    ok, mismatch = verify_numerator_G2(num, vbox)
    report = ReconstructionReport(
        t_degree_guess=t_degree_guess,
        reconstruction_box=rbox,
        verification_box=vbox,
        t_degrees=(num.degree(0), num.degree(1)),
        y_degrees=(num.degree(2), num.degree(3)),
        nonzero_slots=len(g_coefficients(num)),
        verification_passed=ok,
        attempts=attempts,
        first_mismatch=mismatch,
    )
    return MultGF("G2", RationalGF(num, g2_denominator())), report


def g_coefficients(num: LaurentPoly) -> dict[tuple[int, int], LaurentPoly]:
    """Split a numerator into its y-coefficients g_{r,s}(t1, t2) (nonzero only)."""
    buckets: dict[tuple[int, int], dict] = {}
    for (a, b, r, s), c in num.items():
        buckets.setdefault((r, s), {})[(a, b)] = c
    return {rs: LaurentPoly(t, TVARS) for rs, t in sorted(buckets.items())}


def render_numerator_file(num: LaurentPoly) -> str:
    g = g_coefficients(num)
    lines = []
    for r in range(G2_Y_DEGREES[0] + 1):
        for s in range(G2_Y_DEGREES[1] + 1):
            lines.append(f"# g[{r}][{s}]")
            lines.append(g.get((r, s), LaurentPoly.zero(TVARS)).render())
    return "\n".join(lines) + "\n"


def parse_numerator_file(text: str) -> LaurentPoly:
    total = LaurentPoly.zero(HVARS)
    key = None
    count = 0
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            inner = line.lstrip("#").strip()
            if not (inner.startswith("g[") and inner.endswith("]")):
                raise ValueError(f"bad header line {line!r}")
            r, s = inner[2:-1].split("][")
            key = (int(r), int(s))
            continue
        if key is None:
            raise ValueError("coefficient line before any header")
        g = LaurentPoly.parse(line, TVARS)
        total = total + g.embed(HVARS).shift((0, 0) + key)
        key = None
        count += 1
    if count != (G2_Y_DEGREES[0] + 1) * (G2_Y_DEGREES[1] + 1):
        raise ValueError(f"expected 24 coefficient entries, found {count}")
    return total


def load_numerator_G2() -> LaurentPoly | None:
    """The shipped reconstructed numerator, if the data file is present."""
    try:
        text = resources.files("rank2mult.data").joinpath(NUMERATOR_FILE).read_text()
    except (FileNotFoundError, ModuleNotFoundError):
        return None
    return parse_numerator_file(text)


_G2_LOCK = threading.Lock()
_G2_CACHE: dict[str, MultGF] = {}


def multgf(alg: str) -> MultGF:
    """H for any algebra; for G2 the shipped numerator, else a fresh reconstruction."""
    alg = resolve_algebra(alg)
    if alg != "G2":
        return build_H(alg)
    with _G2_LOCK:
        if "G2" not in _G2_CACHE:
            num = load_numerator_G2()
            if num is None:
                _G2_CACHE["G2"] = reconstruct_H_numerator_G2()[0]
            else:
                _G2_CACHE["G2"] = MultGF("G2", RationalGF(num, g2_denominator()))
        return _G2_CACHE["G2"]


# ---------------------------------------------------------------- extraction

class _SeriesCache:
    """Per-algebra expansion of H, enlarged on demand."""

    def __init__(self):
        self._lock = threading.Lock()
        self._series: dict[str, TruncSeries] = {}

    def get(self, alg: str, need: Sequence[int]) -> TruncSeries:
        with self._lock:
            cur = self._series.get(alg)
            if cur is not None and all(n <= b for n, b in zip(need, cur.box)):
                return cur
            box = tuple(need) if cur is None else tuple(max(n, b) for n, b in zip(need, cur.box))
            ser = gf_expand(multgf(alg).gf, box)
            self._series[alg] = ser
            return ser


_CACHE = _SeriesCache()


def h_series(alg: str, box: Sequence[int]) -> TruncSeries:
    return gf_expand(multgf(alg).gf, tuple(box))


def mult_from_H(alg: str, p: int, q: int, m: int, n: int) -> int:
    """Coefficient of t1^p t2^q y1^m y2^n in H; (m, n) must be dominant."""
    alg = resolve_algebra(alg)
    if p < 0 or q < 0:
        raise DomainError(f"highest weight ({p}, {q}) is not dominant")
    if not is_dominant((m, n)):
        raise DomainError(f"weight ({m}, {n}) is not dominant; reflect it first")
    e = (p, q, m, n)
    ser = _CACHE.get(alg, (0, 0, 0, 0))
    try:
        return ser.coeff(e)
    except OutOfBoxError:
        # enlarge-and-retry
        return _CACHE.get(alg, e).coeff(e)


def a_series(alg: str, m: int, n: int, order: int) -> TruncSeries:
    """Truncation of A_{m,n}(t1, t2) on p, q <= order."""
    if m < 0 or n < 0:
        raise DomainError("a_series needs a dominant weight")
    ser = _CACHE.get(resolve_algebra(alg), (order, order, m, n))
    return ser.slice({"y1": m, "y2": n}).restrict((order, order))


def b_poly(alg: str, p: int, q: int) -> BPoly:
    """B_{p,q}(y1, y2): multiplicities of all dominant weights of R_(p,q)."""
    alg = resolve_algebra(alg)
    if p < 0 or q < 0:
        raise DomainError(f"highest weight ({p}, {q}) is not dominant")
    mb, nb = dominant_weight_bounds(alg, p, q)
    ser = _CACHE.get(alg, (p, q, mb, nb))
    sl = ser.slice({"t1": p, "t2": q})
    return BPoly(alg, (p, q), LaurentPoly(dict(sl.items()), ("y1", "y2")))
