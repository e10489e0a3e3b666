#!/usr/bin/env python3
"""Recover the G2 multiplicity generating-function numerator from the oracle.

Writes the 24 coefficients g[r][s](t1, t2) in the shipped text format and
prints the reconstruction report.  With --install the result replaces the
package data file (only after it has passed the re-expansion check).
"""
import argparse
import json
import sys
import time
from pathlib import Path

from rank2mult import multgf


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--t-degree", type=int, default=14, help="initial t-degree guess")
    parser.add_argument("--margin", type=int, default=2, help="extra box width beyond the guess")
    parser.add_argument("--output", default="NumeratorHG2.txt")
    parser.add_argument("--install", action="store_true",
                        help="also overwrite src/rank2mult/data/" + multgf.NUMERATOR_FILE)
    args = parser.parse_args(argv)

    start = time.perf_counter()
    mg, report = multgf.reconstruct_H_numerator_G2(args.t_degree, margin=args.margin)
    text = multgf.render_numerator_file(mg.gf.numerator)
    Path(args.output).write_text(text)
    summary = report.as_dict()
    summary["seconds"] = round(time.perf_counter() - start, 2)
    print(json.dumps(summary, indent=2, sort_keys=True))
    if not report.verification_passed:
        print("re-expansion check failed; nothing installed", file=sys.stderr)
        return 3
    if args.install:
        target = Path(__file__).resolve().parents[1] / "src" / "rank2mult" / "data" / multgf.NUMERATOR_FILE
        target.write_text(text)
        print(f"installed {target}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
