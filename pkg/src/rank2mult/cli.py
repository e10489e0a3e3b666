"""Command line interface: ``rank2mult <verb> ...`` or ``python -m rank2mult``.

Exit codes: 0 success, 2 usage error, 3 mathematical disagreement,
4 internal consistency failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import chargf, crossval, multgf
from .errors import InternalConsistencyError, Rank2Error, UnknownAlgebraError
from .freudenthal import freudenthal_table, oracle_character
from .liecore import orbit, resolve_algebra, weyl_dim

FORMAT_ENV = "RANK2MULT_FORMAT"
FORMATS = ("text", "json", "csv")
CSV_FIELDS = ("algebra", "p", "q", "m", "n", "method", "value")

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_INTERNAL = 0, 2, 3, 4


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def dump_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: r.get(k, "") for k in CSV_FIELDS})
    return buf.getvalue()


def _algebra(text: str) -> str:
    try:
        return resolve_algebra(text)
    except UnknownAlgebraError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


# ---------------------------------------------------------------- verbs

def cmd_mult(args):
    alg, p, q = args.algebra, args.p, args.q
    (m, n), reflected = crossval.reflect_query(alg, args.m, args.n)
    methods = crossval.METHODS if args.method == "all" else (args.method,)
    rec, dec = crossval.all_methods(alg, p, q, m, n)
    records = [r for r in rec if r.method in methods]
    declined = [d for d in dec if d in methods]
    values = {r.value for r in records}
    agree = len(values) <= 1
    payload = {
        "algebra": alg, "p": p, "q": q,
        "query": [args.m, args.n], "dominant": [m, n], "reflected": reflected,
        "records": [r.as_dict() for r in records],
        "declined": declined, "agree": agree,
        "value": records[0].value if agree and records else None,
    }
    rows = [r.as_dict() for r in records]
    lines = []
    if reflected:
        lines.append(f"weight ({args.m}, {args.n}) reflected to dominant ({m}, {n})")
    for r in records:
        lines.append(f"{alg} R({p},{q}) mult({m},{n}) [{r.method}] = {r.value}")
    for d in declined:
        lines.append(f"[{d}] declined: closed forms cover m + n <= 4 only")
    if len(records) > 1:
        lines.append("methods agree" if agree else "METHODS DISAGREE")
    return payload, rows, "\n".join(lines) + "\n", EXIT_OK if agree else EXIT_DISAGREE


def cmd_character(args):
    alg, p, q = args.algebra, args.p, args.q
    polys = {}
    if args.method in ("freudenthal", "all"):
        polys["freudenthal"] = oracle_character(alg, p, q).poly
    if args.method in ("genfun", "all"):
        polys["genfun"] = chargf.characters_from_G(alg, p, q)[(p, q)].poly
    agree = len(set(polys.values())) == 1
    first = next(iter(polys.values()))
    terms = [{"m": e[0], "n": e[1], "value": c} for e, c in sorted(first.items())]
    payload = {"algebra": alg, "p": p, "q": q, "dimension": weyl_dim(alg, p, q),
               "methods": sorted(polys), "agree": agree,
               "polynomial": first.render(), "terms": terms}
    rows = [{"algebra": alg, "p": p, "q": q, "method": meth, **t}
            for meth, poly in polys.items()
            for t in ({"m": e[0], "n": e[1], "value": c} for e, c in sorted(poly.items()))]
    text = f"chi[{alg}]({p},{q}) = {first.render()}\n"
    if len(polys) > 1:
        text += "methods agree\n" if agree else "METHODS DISAGREE\n"
    return payload, rows, text, EXIT_OK if agree else EXIT_DISAGREE


def cmd_dim(args):
    alg, p, q = args.algebra, args.p, args.q
    d = weyl_dim(alg, p, q)
    payload = {"algebra": alg, "p": p, "q": q, "dimension": d}
    rows = [{"algebra": alg, "p": p, "q": q, "method": "weyl", "value": d}]
    return payload, rows, f"dim {alg}({p},{q}) = {d}\n", EXIT_OK


def cmd_table(args):
    alg, p, q = args.algebra, args.p, args.q
    table = freudenthal_table(alg, p, q)
    entries = []
    for w in table.dominant_weights():
        entries.append({"m": w[0], "n": w[1], "multiplicity": table[w],
                        "orbit_size": len(orbit(alg, w))})
    checksum = sum(e["multiplicity"] * e["orbit_size"] for e in entries)
    dim = weyl_dim(alg, p, q)
    payload = {"algebra": alg, "p": p, "q": q, "weights": entries,
               "checksum": checksum, "dimension": dim, "b_poly": multgf.b_poly(alg, p, q).poly.render()}
    rows = [{"algebra": alg, "p": p, "q": q, "m": e["m"], "n": e["n"],
             "method": "freudenthal", "value": e["multiplicity"]} for e in entries]
    out = [f"{alg} R({p},{q})", f"{'weight':>12} {'mult':>6} {'orbit':>6}"]
    for e in entries:
        out.append(f"{'(%d,%d)' % (e['m'], e['n']):>12} {e['multiplicity']:>6} {e['orbit_size']:>6}")
    out.append(f"checksum {' + '.join('%d*%d' % (e['multiplicity'], e['orbit_size']) for e in entries)}"
               f" = {checksum} (dim {dim})")
    return payload, rows, "\n".join(out) + "\n", EXIT_OK if checksum == dim else EXIT_DISAGREE


def cmd_a_series(args):
    alg, m, n, order = args.algebra, args.m, args.n, args.order
    ser = multgf.a_series(alg, m, n, order)
    grid = [[ser.coeff((p, q)) for q in range(order + 1)] for p in range(order + 1)]
    payload = {"algebra": alg, "m": m, "n": n, "order": order, "coefficients": grid}
    rows = [{"algebra": alg, "p": p, "q": q, "m": m, "n": n, "method": "genfun", "value": grid[p][q]}
            for p in range(order + 1) for q in range(order + 1)]
    out = [f"A[{alg}]({m},{n}): rows p = 0..{order}, columns q = 0..{order}"]
    out += [" ".join(f"{v:>4}" for v in row) for row in grid]
    return payload, rows, "\n".join(out) + "\n", EXIT_OK


def cmd_verify(args):
    suites = crossval.SUITES if "all" in args.suite else args.suite
    reports = []
    for s in suites:
        reports.extend(crossval.run_suite(s, algebras=args.alg, pmax=args.pmax, qmax=args.qmax,
                                          order=args.order, bound=args.bound, full=args.full))
    ok = all(r.passed for r in reports)
    payload = {"passed": ok, "reports": [r.as_dict() for r in reports]}
    rows = [{"algebra": mm.get("algebra", ""), "p": mm.get("p", ""), "q": mm.get("q", ""),
             "m": mm.get("m", ""), "n": mm.get("n", ""), "method": r.suite, "value": "mismatch"}
            for r in reports for mm in r.mismatches]
    lines = [f"[{'PASS' if r.passed else 'FAIL'}] {r.suite}: {r.cases} cases, "
             f"{len(r.mismatches)} mismatches, {r.elapsed_ms} ms" for r in reports]
    return payload, rows, "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_DISAGREE


def cmd_reconstruct_g2(args):
    mg, report = multgf.reconstruct_H_numerator_G2(args.t_degree)
    text = multgf.render_numerator_file(mg.gf.numerator)
    path = args.numerator_out
    with open(path, "w") as fh:
        fh.write(text)
    summary = report.as_dict()
    summary["path"] = path
    lines = [f"wrote {path}: {summary['slots']} g[r][s] entries, {report.nonzero_slots} nonzero "
             f"(y-degrees {report.y_degrees[0]}, {report.y_degrees[1]}; "
             f"t-degrees {report.t_degrees[0]}, {report.t_degrees[1]})",
             f"re-expansion on box {list(report.verification_box)}: "
             f"{'pass' if report.verification_passed else 'FAIL'}"]
    return summary, [], "\n".join(lines) + "\n", EXIT_OK if report.verification_passed else EXIT_DISAGREE


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help=f"output format (default: ${FORMAT_ENV} or text)")
    common.add_argument("-o", "--output", default=None, help="write output to this file")

    parser = argparse.ArgumentParser(prog="rank2mult",
                                     description="Weight multiplicities for A2, C2 (B2) and G2.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("mult", parents=[common], help="multiplicity of a weight")
    p.add_argument("algebra", type=_algebra)
    for name in ("p", "q"):
        p.add_argument(name, type=_nonneg)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=crossval.METHODS + ("all",), default="all")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("character", parents=[common], help="character as a Laurent polynomial")
    p.add_argument("algebra", type=_algebra)
    p.add_argument("p", type=_nonneg)
    p.add_argument("q", type=_nonneg)
    p.add_argument("--method", choices=("genfun", "freudenthal", "all"), default="all")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("dim", parents=[common], help="Weyl dimension")
    p.add_argument("algebra", type=_algebra)
    p.add_argument("p", type=_nonneg)
    p.add_argument("q", type=_nonneg)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("table", parents=[common], help="dominant weights with multiplicities")
    p.add_argument("algebra", type=_algebra)
    p.add_argument("p", type=_nonneg)
    p.add_argument("q", type=_nonneg)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("a-series", parents=[common], help="A_{m,n}(t1,t2) coefficient grid")
    p.add_argument("algebra", type=_algebra)
    p.add_argument("m", type=_nonneg)
    p.add_argument("n", type=_nonneg)
    p.add_argument("--order", type=_nonneg, default=8)
    p.set_defaults(func=cmd_a_series)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", action="append", choices=crossval.SUITES + ("all",), required=True)
    p.add_argument("--alg", action="append", type=_algebra, default=None)
    p.add_argument("--pmax", type=_nonneg, default=None)
    p.add_argument("--qmax", type=_nonneg, default=None)
    p.add_argument("--order", type=_nonneg, default=None)
    p.add_argument("--bound", type=_nonneg, default=None)
    p.add_argument("--full", action="store_true", help="pde-g2: check the full rational identity")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reconstruct-g2", parents=[common], help="recover the G2 H numerator")
    p.add_argument("--t-degree", type=_nonneg, default=14)
    p.add_argument("--numerator-out", default="NumeratorHG2.txt",
                   help="path of the numerator text artifact")
    p.set_defaults(func=cmd_reconstruct_g2)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or os.environ.get(FORMAT_ENV, "text")
    if fmt not in FORMATS:
        parser.error(f"${FORMAT_ENV} must be one of {', '.join(FORMATS)}")
    try:
        payload, rows, text, code = args.func(args)
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Rank2Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = {"json": lambda: dump_json(payload), "csv": lambda: dump_csv(rows), "text": lambda: text}[fmt]()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
