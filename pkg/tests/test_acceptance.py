"""Acceptance suite.

One test per criterion, each printing a pass/fail line (run pytest with
``-s`` or check captured output).  Bounds and tolerances are fixed here;
run ``pytest tests/test_acceptance.py`` for the full gate.
"""

import random
import time
from fractions import Fraction
from itertools import product
from math import comb, factorial

from subseq_census import (
    census,
    count_total,
    count_total_run_recursive,
    deficiency_polynomial,
    enumerate_distinct,
    estimate_expected_total,
    exhaustive_expected_length,
    exhaustive_expected_total,
    expected_length,
    expected_total,
    expected_total_recurrence,
    expected_total_recurrence_values,
    triangle,
)


def report(criterion, ok, elapsed):
    print(f"{'PASS' if ok else 'FAIL'}  criterion {criterion}  ({elapsed:.1f}s)")
    assert ok, f"criterion {criterion} failed"


def test_criterion_1_closed_form_vs_recurrence():
    start = time.monotonic()
    ok = all(
        v == expected_total(n)
        for n, v in enumerate(expected_total_recurrence_values(2000))
    )
    ok = ok and expected_total_recurrence(2000) == expected_total(2000)
    elapsed = time.monotonic() - start
    report("1 (closed form, n <= 2000)", ok and elapsed < 10, elapsed)


def test_criterion_2_definition_level_ground_truth():
    start = time.monotonic()
    ok = True
    for n in range(15):
        ok = ok and exhaustive_expected_total(n) == expected_total(n)
        for m in range(n + 2):
            ok = ok and exhaustive_expected_length(n, m) == expected_length(n, m)
    elapsed = time.monotonic() - start
    report("2 (oracle expectations, n <= 14)", ok and elapsed < 60, elapsed)


def test_criterion_3_triangle_consistency():
    start = time.monotonic()
    tri = triangle(500)
    ok = True
    for n in range(501):
        row = tri.row(n)
        ok = ok and sum(row) == expected_total(n)
        ok = ok and all((v * 2 ** (n - m)).denominator == 1 for m, v in enumerate(row))
    report("3 (triangle, n <= 500)", ok, time.monotonic() - start)


def test_criterion_4_runs_identity():
    start = time.monotonic()
    ok = all(expected_length(n, n - 1) == Fraction(n + 1, 2) for n in range(1, 101))
    report("4 (runs identity, n <= 100)", ok, time.monotonic() - start)


def test_criterion_5_deficiency_polynomials():
    start = time.monotonic()
    ok = True
    for m in range(11):
        poly = deficiency_polynomial(m)
        ok = ok and poly.leading_coefficient == Fraction(1, 2**m * factorial(m))
        tri = triangle(m + 50)
        values = [tri.value(n, n - m) for n in range(m, m + 51)]
        ok = ok and all(
            poly(n) == v for n, v in zip(range(m, m + 51), values)
        )
        diffs = values
        for _ in range(m + 1):
            diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        ok = ok and all(d == 0 for d in diffs)
    report("5 (deficiency polynomials, m <= 10)", ok, time.monotonic() - start)


def test_criterion_6_per_string_agreement():
    start = time.monotonic()
    ok = True
    for n in range(13):
        for bits in product("01", repeat=n):
            s = "".join(bits)
            sset = enumerate_distinct(s)
            total = count_total(s)
            ok = ok and total == len(sset.elements)
            ok = ok and total == count_total_run_recursive(s)
            ok = ok and census(s) == sset.by_length()
            if not ok:
                break
    rng = random.Random(0xACCE55)
    for _ in range(1000):
        s = "".join(rng.choice("01") for _ in range(64))
        ok = ok and count_total(s) == count_total_run_recursive(s)
    elapsed = time.monotonic() - start
    report("6 (per-string agreement)", ok and elapsed < 60, elapsed)


def test_criterion_7_monte_carlo_calibration():
    start = time.monotonic()
    est = estimate_expected_total(30, 100_000, seed=20240817)
    gap = abs(Fraction(est.mean) - expected_total(30))
    ok = gap <= 4 * Fraction(est.std_error)
    exact20 = expected_total(20)
    covered = sum(
        estimate_expected_total(20, 5000, seed=seed).covers(exact20)
        for seed in range(20)
    )
    ok = ok and covered >= 15
    report(
        f"7 (Monte Carlo: within 4 SE at n=30, coverage {covered}/20 at n=20)",
        ok,
        time.monotonic() - start,
    )


def test_criterion_8_point_values():
    start = time.monotonic()
    p2 = deficiency_polynomial(2)
    ok = (
        count_total("0101") == 12
        and expected_total(2) == Fraction(7, 2)
        and expected_length(2, 1) == Fraction(3, 2)
        and all(p2(n) * 8 == n * n + n + 2 for n in range(2, 51))
    )
    report("8 (pinned point values)", ok, time.monotonic() - start)
