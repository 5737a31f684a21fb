"""Self-verification suites.

Each check re-derives a family of identities at configurable bounds and
reports pass/fail; ``run_all`` is what the CLI's ``verify`` subcommand
executes.  The full bounds match the package's acceptance criteria, the
quick bounds cut them down to a few seconds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Callable, Iterator

from . import counting, expectation, montecarlo, oracle


@dataclass(frozen=True)
class Bounds:
    closed_form_n: int
    oracle_n: int
    triangle_n: int
    runs_identity_n: int
    poly_m: int
    exhaustive_n: int
    random_strings: int
    random_length: int
    mc_samples: int
    mc_seeds: int


QUICK = Bounds(
    closed_form_n=200, oracle_n=8, triangle_n=60, runs_identity_n=100,
    poly_m=4, exhaustive_n=8, random_strings=100, random_length=64,
    mc_samples=2000, mc_seeds=5,
)

FULL = Bounds(
    closed_form_n=2000, oracle_n=14, triangle_n=500, runs_identity_n=100,
    poly_m=10, exhaustive_n=12, random_strings=1000, random_length=64,
    mc_samples=100_000, mc_seeds=20,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def check_closed_form(b: Bounds) -> CheckResult:
    values = expectation.expected_total_recurrence_values(b.closed_form_n)
    for n, v in enumerate(values):
        if expectation.expected_total(n) != v:
            return CheckResult("closed-form-vs-recurrence", False, f"mismatch at n={n}")
    if expectation.expected_total_recurrence(b.closed_form_n) != expectation.expected_total(b.closed_form_n):
        return CheckResult("closed-form-vs-recurrence", False,
                           f"recurrence endpoint mismatch at n={b.closed_form_n}")
    series_bound = min(b.closed_form_n, 200)
    for n in range(series_bound + 1):
        if expectation.expected_total(n) != expectation.expected_total_series(n):
            return CheckResult("closed-form-vs-recurrence", False,
                               f"series mismatch at n={n}")
    return CheckResult("closed-form-vs-recurrence", True,
                       f"n <= {b.closed_form_n}, series cross-check n <= {series_bound}")


def check_oracle_expectations(b: Bounds) -> CheckResult:
    for n in range(b.oracle_n + 1):
        if oracle.exhaustive_expected_total(n) != expectation.expected_total(n):
            return CheckResult("oracle-expectations", False, f"total mismatch at n={n}")
        for m in range(n + 2):
            if oracle.exhaustive_expected_length(n, m) != expectation.expected_length(n, m):
                return CheckResult("oracle-expectations", False,
                                   f"length mismatch at n={n}, m={m}")
    return CheckResult("oracle-expectations", True, f"n <= {b.oracle_n}, all m")


def check_triangle(b: Bounds) -> CheckResult:
    tri = expectation.triangle(b.triangle_n)
    for n in range(b.triangle_n + 1):
        row = tri.row(n)
        if sum(row) != expectation.expected_total(n):
            return CheckResult("triangle-consistency", False, f"row sum wrong at n={n}")
        for m, v in enumerate(row):
            if (v * 2 ** (n - m)).denominator != 1:
                return CheckResult("triangle-consistency", False,
                                   f"non-dyadic entry at n={n}, m={m}")
            if not 1 <= v <= comb(n, m):
                return CheckResult("triangle-consistency", False,
                                   f"entry out of range at n={n}, m={m}")
    return CheckResult("triangle-consistency", True, f"n <= {b.triangle_n}")


def check_runs_identity(b: Bounds) -> CheckResult:
    for n in range(1, b.runs_identity_n + 1):
        if expectation.expected_length(n, n - 1) != Fraction(n + 1, 2):
            return CheckResult("runs-identity", False, f"mismatch at n={n}")
    return CheckResult("runs-identity", True, f"1 <= n <= {b.runs_identity_n}")


def check_deficiency_polynomials(b: Bounds) -> CheckResult:
    tri = expectation.triangle(b.poly_m + 50)
    for m in range(b.poly_m + 1):
        poly = expectation.deficiency_polynomial(m)
        if poly.leading_coefficient != Fraction(1, 2**m * factorial(m)):
            return CheckResult("deficiency-polynomials", False,
                               f"leading coefficient wrong at m={m}")
        values = [tri.value(n, n - m) for n in range(m, m + 51)]
        if any(poly(n) != v for n, v in zip(range(m, m + 51), values)):
            return CheckResult("deficiency-polynomials", False,
                               f"polynomial disagrees with triangle at m={m}")
        diffs = values
        for _ in range(m + 1):
            diffs = [b2 - a for a, b2 in zip(diffs, diffs[1:])]
        if any(d != 0 for d in diffs):
            return CheckResult("deficiency-polynomials", False,
                               f"order-{m + 1} differences nonzero at m={m}")
    return CheckResult("deficiency-polynomials", True, f"m <= {b.poly_m}, 50 points each")


def _random_binary(rng: random.Random, n: int) -> str:
    return "".join(rng.choice("01") for _ in range(n))


def check_per_string_agreement(b: Bounds) -> CheckResult:
    for n in range(b.exhaustive_n + 1):
        for bits in product("01", repeat=n):
            s = "".join(bits)
            sset = oracle.enumerate_distinct(s)
            cen = counting.census(s)
            if counting.count_total(s) != len(sset.elements):
                return CheckResult("per-string-agreement", False, f"total wrong for {s!r}")
            if counting.count_total_run_recursive(s) != len(sset.elements):
                return CheckResult("per-string-agreement", False,
                                   f"run recursion wrong for {s!r}")
            if cen != sset.by_length():
                return CheckResult("per-string-agreement", False, f"census wrong for {s!r}")
    rng = random.Random(0xC0FFEE)
    for _ in range(b.random_strings):
        s = _random_binary(rng, b.random_length)
        if counting.count_total(s) != counting.count_total_run_recursive(s):
            return CheckResult("per-string-agreement", False,
                               f"DP vs recursion mismatch for {s!r}")
    return CheckResult(
        "per-string-agreement", True,
        f"exhaustive n <= {b.exhaustive_n}, {b.random_strings} random at n={b.random_length}",
    )


def check_monte_carlo(b: Bounds) -> CheckResult:
    n = 30 if b is FULL else 10
    est = montecarlo.estimate_expected_total(n, b.mc_samples, seed=20240817)
    exact = expectation.expected_total(n)
    err = abs(Fraction(est.mean) - exact)
    if err > 4 * Fraction(est.std_error):
        return CheckResult("monte-carlo", False,
                           f"estimate off by more than 4 SE at n={n}")
    covered = 0
    for seed in range(b.mc_seeds):
        e = montecarlo.estimate_expected_total(20, max(b.mc_samples // 20, 100), seed=seed)
        if e.covers(expectation.expected_total(20)):
            covered += 1
    needed = (b.mc_seeds * 3) // 4
    if covered < needed:
        return CheckResult("monte-carlo", False,
                           f"only {covered}/{b.mc_seeds} CIs covered the exact value")
    return CheckResult("monte-carlo", True,
                       f"n={n} within 4 SE; coverage {covered}/{b.mc_seeds}")


def check_point_values(b: Bounds) -> CheckResult:
    ok = (
        counting.count_total("0101") == 12
        and counting.census("0101") == [1, 2, 4, 4, 1]
        and expectation.expected_total(2) == Fraction(7, 2)
        and expectation.expected_length(2, 1) == Fraction(3, 2)
        and all(
            expectation.deficiency_polynomial(2)(n) * 8 == n * n + n + 2
            for n in range(2, 51)
        )
    )
    return CheckResult("point-values", ok, "pinned regression values")


ALL_CHECKS: tuple[Callable[[Bounds], CheckResult], ...] = (
    check_closed_form,
    check_oracle_expectations,
    check_triangle,
    check_runs_identity,
    check_deficiency_polynomials,
    check_per_string_agreement,
    check_monte_carlo,
    check_point_values,
)


def run_all(bounds: Bounds) -> Iterator[CheckResult]:
    for check in ALL_CHECKS:
        yield check(bounds)
