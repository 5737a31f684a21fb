#!/usr/bin/env python3
"""Monte Carlo estimates of the expected total count against the exact value.

Usage: python3 scripts/mc_vs_exact.py [--samples K] [--seed S] [n ...]
"""

import argparse
from fractions import Fraction

from subseq_census import estimate_expected_total, expected_total


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("lengths", nargs="*", type=int, default=[5, 10, 20, 30, 40])
    parser.add_argument("--samples", type=int, default=20_000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(f"{'n':>4}  {'exact':>18}  {'estimate':>18}  {'SE':>12}  z")
    for n in args.lengths or [5, 10, 20, 30, 40]:
        exact = expected_total(n)
        est = estimate_expected_total(n, args.samples, seed=args.seed)
        gap = Fraction(est.mean) - exact
        z = float(gap / Fraction(est.std_error)) if est.std_error else 0.0
        print(
            f"{n:>4}  {float(exact):>18.6f}  {float(est.mean):>18.6f}"
            f"  {float(est.std_error):>12.4g}  {z:+.2f}"
        )


if __name__ == "__main__":
    main()
