#!/usr/bin/env python3
"""Growth of the gap between the exact expectation and 2^-m C(n, m).

For each deficiency m the gap should grow like n^(m-1); the last column
divides the gap by n^(m-1) and is expected to level off.

Usage: python3 scripts/approximation_error.py [--max-m M] [--max-n N]
"""

import argparse

from subseq_census import binomial_approximation_report


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-m", type=int, default=4)
    parser.add_argument("--max-n", type=int, default=60)
    args = parser.parse_args()

    for m in range(1, args.max_m + 1):
        print(f"deficiency m={m}")
        for n in range(m, args.max_n + 1, max(1, args.max_n // 10)):
            r = binomial_approximation_report(n, m)
            scaled = float(r.error) / n ** (m - 1) if n else float(r.error)
            print(
                f"  n={n:4}  exact={float(r.exact):14.4f}"
                f"  approx={float(r.approximation):14.4f}"
                f"  error={float(r.error):12.4f}  error/n^{m - 1}={scaled:10.6f}"
            )


if __name__ == "__main__":
    main()
