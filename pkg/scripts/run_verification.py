#!/usr/bin/env python3
"""Run every cross-validation suite and write a JSON report.

Equivalent to ``rank2mult verify --suite all`` but also records timings per
suite and can run the slow full-identity PDE check.
"""
import argparse
import json
import sys
from pathlib import Path

from rank2mult import crossval


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--suite", action="append", choices=crossval.SUITES,
                        help="run only these suites (repeatable)")
    parser.add_argument("--full-pde", action="store_true", help="check the uncut PDE identity")
    parser.add_argument("--report", default="verification_report.json")
    args = parser.parse_args(argv)

    reports = []
    for name in args.suite or crossval.SUITES:
        for rep in crossval.run_suite(name, full=args.full_pde):
            status = "PASS" if rep.passed else "FAIL"
            print(f"{status:4} {rep.suite:<18} {rep.cases:>6} cases {rep.elapsed_ms:>7} ms")
            reports.append(rep.as_dict())
    Path(args.report).write_text(json.dumps(reports, indent=2, sort_keys=True) + "\n")
    ok = all(r["passed"] for r in reports)
    print(f"{'all suites passed' if ok else 'FAILURES'}; report in {args.report}")
    return 0 if ok else 3


if __name__ == "__main__":
    sys.exit(main())
