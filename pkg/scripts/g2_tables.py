#!/usr/bin/env python3
"""Print G2 multiplicity tables for a range of highest weights.

Each row lists the dominant weights of R(p, q) with multiplicities computed
from the generating function and checked against the Freudenthal recursion.
"""
import argparse

from rank2mult.freudenthal import freudenthal_table
from rank2mult.liecore import weyl_dim
from rank2mult.multgf import b_poly


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max", type=int, default=3)
    parser.add_argument("--alg", default="G2")
    args = parser.parse_args()
    for p in range(args.max + 1):
        for q in range(args.max + 1):
            b = b_poly(args.alg, p, q)
            assert dict(b.poly.terms) == dict(freudenthal_table(args.alg, p, q).entries)
            print(f"R({p},{q}) dim {weyl_dim(args.alg, p, q):>6}: {b.poly.render()}")


if __name__ == "__main__":
    main()
