#!/usr/bin/env python3
"""Quadratic Kloosterman sum survey.

Checks the stationary-phase identity on a grid of moduli, fits the pointwise
and averaged bounds over divisors of b^N, and prints the fits as CSV.
"""

import argparse
import sys

from palindrome_lab import harness
from palindrome_lab.report import emit


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--base", type=int, default=2)
    parser.add_argument("--n-max", type=int, default=14)
    parser.add_argument("--seed", type=int, default=harness.DEFAULT_SEED)
    args = parser.parse_args()

    pairs = [(0, 1), (1, 1), (2, 3), (5, 7), (3, 5)]
    pointwise = harness.fit_pointwise_k2(args.base, args.n_max, pairs)
    averaged = harness.fit_averaged_k2(args.base, (8, 10, 12), (4, 16, 64), pairs)
    critical = harness.fit_critical_point_bound((2, 3, 5, 7, 11), 8, 25,
                                                seed=args.seed)
    emit([pointwise, *averaged, critical], "csv", sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
