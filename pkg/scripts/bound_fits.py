#!/usr/bin/env python3
"""Implied-constant fits for the square-divisor counts.

Fits the three bound shapes for S_b(x, D) (elementary D^(-3/2), and the two
exponential-sum shapes on their windows) over a logarithmic grid, and prints
the empirical crossover picture as CSV on stdout.
"""

import argparse
import math
import sys

from palindrome_lab import harness
from palindrome_lab.report import emit


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--base", type=int, default=10)
    parser.add_argument("--xs", type=int, nargs="+",
                        default=[10**6, 10**7, 10**8])
    parser.add_argument("--d-exponents", type=float, nargs="+",
                        default=[0.24, 0.26, 0.30, 0.34, 0.40],
                        help="D = ceil(x**e) per grid point")
    args = parser.parse_args()

    xs, ds = [], []
    for x in args.xs:
        for e in args.d_exponents:
            xs.append(x)
            ds.append(math.ceil(x**e))

    elementary = harness.fit_prop1(args.base, xs, ds)
    mid, low = harness.fit_prop2_prop3(args.base, xs, ds)
    emit([elementary, mid, low], "csv", sys.stdout)
    for note in mid.notes + low.notes:
        print(f"# {note}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
