"""Cross-validation suites shared by the CLI and the acceptance tests."""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from . import chargf, closedforms, multgf
from .errors import UnsupportedFormulaError
from .freudenthal import dimension_checksum, freudenthal_table, oracle_character
from .liecore import ALGEBRAS, dominant_representative, resolve_algebra, weyl_dim
from .series import TruncSeries, theta_f_expand

METHODS = ("formula", "genfun", "freudenthal")
DEFAULT_BOUNDS = {"A2": 12, "C2": 12, "G2": 8}


@dataclass(frozen=True)
class MultiplicityRecord:
    algebra: str
    p: int
    q: int
    m: int
    n: int
    value: int
    method: str

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class ValidationReport:
    suite: str
    cases: int = 0
    mismatches: list = field(default_factory=list)
    elapsed_ms: int = 0
    details: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {"suite": self.suite, "cases": self.cases, "passed": self.passed,
                "mismatches": self.mismatches, "elapsed_ms": self.elapsed_ms,
                "details": self.details}


def multiplicity(alg: str, p: int, q: int, m: int, n: int, method: str) -> int:
    """Multiplicity of a dominant weight by one method."""
    if method == "formula":
        return closedforms.mu_closed(alg, p, q, m, n)
    if method == "genfun":
        return multgf.mult_from_H(alg, p, q, m, n)
    if method == "freudenthal":
        return freudenthal_table(alg, p, q)[(m, n)]
    raise ValueError(f"unknown method {method!r}")


def all_methods(alg: str, p: int, q: int, m: int, n: int) -> tuple[list[MultiplicityRecord], list[str]]:
    """Records from every applicable method, plus the methods that declined."""
    alg = resolve_algebra(alg)
    records, declined = [], []
    for method in METHODS:
        try:
            v = multiplicity(alg, p, q, m, n, method)
        except UnsupportedFormulaError:
            declined.append(method)
            continue
        records.append(MultiplicityRecord(alg, p, q, m, n, v, method))
    return records, declined


def reflect_query(alg: str, m: int, n: int) -> tuple[tuple[int, int], bool]:
    dom = dominant_representative(alg, (m, n))
    return dom, dom != (m, n)


def _timed(report: ValidationReport, start: float) -> ValidationReport:
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


def three_way(alg: str, pmax: int | None = None, qmax: int | None = None) -> ValidationReport:
    """formula = H coefficient = Freudenthal for all m + n <= 4."""
    alg = resolve_algebra(alg)
    pmax = DEFAULT_BOUNDS[alg] if pmax is None else pmax
    qmax = DEFAULT_BOUNDS[alg] if qmax is None else qmax
    start = time.perf_counter()
    rep = ValidationReport(f"three-way/{alg}")
    ser = multgf.h_series(alg, (pmax, qmax, 4, 4))
    for m, n in closedforms.FORMULA_KEYS:
        for p in range(pmax + 1):
            for q in range(qmax + 1):
                vals = {"formula": closedforms.mu_closed(alg, p, q, m, n),
                        "genfun": ser.coeff((p, q, m, n)),
                        "freudenthal": freudenthal_table(alg, p, q)[(m, n)]}
                rep.cases += 1
                if len(set(vals.values())) != 1 or min(vals.values()) < 0:
                    rep.mismatches.append({"algebra": alg, "p": p, "q": q, "m": m, "n": n, **vals})
    return _timed(rep, start)


def characters_suite(alg: str, bound: int | None = None) -> ValidationReport:
    alg = resolve_algebra(alg)
    bound = {"A2": 8, "C2": 8, "G2": 6}[alg] if bound is None else bound
    start = time.perf_counter()
    rep = ValidationReport(f"characters/{alg}")
    for (p, q), ch in chargf.characters_from_G(alg, bound, bound).items():
        rep.cases += 1
        oracle = oracle_character(alg, p, q).poly
        dim = weyl_dim(alg, p, q)
        if ch.poly != oracle or ch.dimension() != dim:
            rep.mismatches.append({"algebra": alg, "p": p, "q": q,
                                   "genfun_dim": ch.dimension(), "weyl_dim": dim,
                                   "equal_to_oracle": ch.poly == oracle})
    return _timed(rep, start)


def checksum_suite(alg: str, bound: int = 8) -> ValidationReport:
    alg = resolve_algebra(alg)
    start = time.perf_counter()
    rep = ValidationReport(f"checksums/{alg}")
    for p in range(bound + 1):
        for q in range(bound + 1):
            rep.cases += 1
            s, d = dimension_checksum(alg, p, q), weyl_dim(alg, p, q)
            if s != d:
                rep.mismatches.append({"algebra": alg, "p": p, "q": q, "checksum": s, "weyl_dim": d})
    return _timed(rep, start)


def _from_records(suite: str, records: list[dict], start: float) -> ValidationReport:
    rep = ValidationReport(suite, cases=len(records), details=records)
    rep.mismatches = [r for r in records if not r["passed"]]
    return _timed(rep, start)


def cg_suite() -> ValidationReport:
    start = time.perf_counter()
    return _from_records("cg-g2", chargf.verify_cg_series_G2(), start)


def pde_suite(order: int = 8, full: bool = False) -> ValidationReport:
    start = time.perf_counter()
    return _from_records("pde-g2", [chargf.verify_pde_G2(order, full=full)], start)


def dim_gf_suite(bound: int = 10) -> ValidationReport:
    start = time.perf_counter()
    recs = chargf.dimension_gf_E(bound)
    recs += [chargf.dimension_specialization_check(a, bound) for a in ("A2", "C2")]
    return _from_records("dim-gf", recs, start)


def min_form_suite(bound: int = 20) -> ValidationReport:
    start = time.perf_counter()
    rep = ValidationReport("min-form")
    for s in (0, 1, 2):
        for p in range(bound + 1):
            for q in range(bound + 1):
                rep.cases += 1
                lhs, rhs = closedforms.a2_min_form(p, q, s)
                if lhs != rhs:
                    rep.mismatches.append({"p": p, "q": q, "s": s, "lhs": lhs, "rhs": rhs})
    return _timed(rep, start)


def symmetry_suite(bound: int = 12) -> ValidationReport:
    """A2 Dynkin symmetry mu_{p,q}(m,n) = mu_{q,p}(n,m) for every method."""
    start = time.perf_counter()
    rep = ValidationReport("a2-symmetry")
    ser = multgf.h_series("A2", (bound, bound, 4, 4))
    for m, n in closedforms.FORMULA_KEYS:
        for p in range(bound + 1):
            for q in range(bound + 1):
                rep.cases += 1
                pairs = {
                    "formula": (closedforms.mu_closed("A2", p, q, m, n),
                                closedforms.mu_closed("A2", q, p, n, m)),
                    "genfun": (ser.coeff((p, q, m, n)), ser.coeff((q, p, n, m))),
                    "freudenthal": (freudenthal_table("A2", p, q)[(m, n)],
                                    freudenthal_table("A2", q, p)[(n, m)]),
                }
                if any(a != b for a, b in pairs.values()):
                    rep.mismatches.append({"p": p, "q": q, "m": m, "n": n,
                                           **{k: list(v) for k, v in pairs.items()}})
    return _timed(rep, start)


def reconstruct_suite(t_degree_guess: int = 14) -> ValidationReport:
    start = time.perf_counter()
    mg, report = multgf.reconstruct_H_numerator_G2(t_degree_guess)
    d = report.as_dict()
    ok = (report.verification_passed and report.y_degrees[0] <= 5 and report.y_degrees[1] <= 3
          and all(v < w for v, w in zip(report.reconstruction_box, report.verification_box)))
    shipped = multgf.load_numerator_G2()
    d["matches_shipped_file"] = shipped is not None and shipped == mg.gf.numerator
    return _from_records("h-reconstruct", [{"name": "G2 numerator", "passed": ok, **d}], start)


def f_tilde_suite(order: int = 12) -> ValidationReport:
    start = time.perf_counter()
    return _from_records("f-tilde", [closedforms.F_G2_gf_check(order)], start)


def brute_force_series(r: int, k: int, s: int, order: int) -> TruncSeries:
    """x^r (1 - x^k)^(-s) by repeated multiplication of truncated geometric series."""
    geo = [1 if j % k == 0 else 0 for j in range(order + 1)]
    acc = [0] * (order + 1)
    if r <= order:
        acc[r] = 1
    for _ in range(s):
        new = [0] * (order + 1)
        for i, a in enumerate(acc):
            if a:
                for j in range(order + 1 - i):
                    if geo[j]:
                        new[i + j] += a
        acc = new
    return TruncSeries({(i,): c for i, c in enumerate(acc)}, (order,), ("x",))


def series_lemma_suite(limit: int = 6, order: int = 60) -> ValidationReport:
    start = time.perf_counter()
    rep = ValidationReport("series-lemma")
    for r in range(limit + 1):
        for k in range(1, limit + 1):
            for s in range(1, limit + 1):
                rep.cases += 1
                if theta_f_expand(r, k, s, order) != brute_force_series(r, k, s, order):
                    rep.mismatches.append({"r": r, "k": k, "s": s})
    return _timed(rep, start)


SUITES = ("three-way", "characters", "checksums", "cg-g2", "pde-g2", "dim-gf",
          "min-form", "a2-symmetry", "h-reconstruct", "f-tilde", "series-lemma")


def run_suite(name: str, algebras=None, pmax=None, qmax=None, order=None, bound=None,
              full=False) -> list[ValidationReport]:
    algebras = list(ALGEBRAS) if not algebras else [resolve_algebra(a) for a in algebras]
    if name == "three-way":
        return [three_way(a, pmax, qmax) for a in algebras]
    if name == "characters":
        return [characters_suite(a, bound) for a in algebras]
    if name == "checksums":
        return [checksum_suite(a, 8 if bound is None else bound) for a in algebras]
    if name == "cg-g2":
        return [cg_suite()]
    if name == "pde-g2":
        return [pde_suite(8 if order is None else order, full=full)]
    if name == "dim-gf":
        return [dim_gf_suite(10 if bound is None else bound)]
    if name == "min-form":
        return [min_form_suite(20 if bound is None else bound)]
    if name == "a2-symmetry":
        return [symmetry_suite(12 if bound is None else bound)]
    if name == "h-reconstruct":
        return [reconstruct_suite()]
    if name == "f-tilde":
        return [f_tilde_suite(12 if order is None else order)]
    if name == "series-lemma":
        return [series_lemma_suite(6, 60 if order is None else order)]
    raise ValueError(f"unknown suite {name!r}")
