#!/usr/bin/env python3
"""Print the expectation triangle and check row sums against the closed form.

Usage: python3 scripts/triangle_table.py [n_max]
"""

import sys

from subseq_census import expected_total, triangle


def main() -> None:
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 10
    tri = triangle(n_max)
    for n in range(n_max + 1):
        row = tri.row(n)
        cells = "  ".join(str(v) for v in row)
        total = expected_total(n)
        status = "ok" if sum(row) == total else "MISMATCH"
        print(f"n={n:3}  [{cells}]  sum={total} ({status})")


if __name__ == "__main__":
    main()
