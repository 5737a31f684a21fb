"""Exact expectation identities: triangle, closed form, polynomials."""

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subseq_census import (
    DomainError,
    GuardExceeded,
    binomial_approximation,
    binomial_approximation_report,
    deficiency_polynomial,
    expected_length,
    expected_length_series,
    expected_total,
    expected_total_recurrence,
    expected_total_recurrence_values,
    expected_total_series,
    triangle,
)


def test_expected_total_examples():
    assert expected_total(0) == 1
    assert expected_total(2) == Fraction(7, 2)
    assert expected_total(10) == Fraction(58537, 512)


def test_recurrence_examples():
    assert expected_total_recurrence(0) == 1
    assert expected_total_recurrence(1) == 2
    assert expected_total_recurrence(3) == Fraction(23, 4)
    assert expected_total_recurrence(10) == Fraction(58537, 512)


def test_three_total_paths_agree():
    values = list(expected_total_recurrence_values(80))
    for n in range(81):
        assert values[n] == expected_total(n)
        assert expected_total_series(n) == expected_total(n)


def test_integrality_of_totals():
    for n in range(60):
        assert 2**n * (expected_total(n) + 1) == 2 * 3**n


def test_triangle_examples():
    tri = triangle(5)
    assert tri.row(0) == (Fraction(1),)
    assert tri.row(2) == (1, Fraction(3, 2), 1)
    assert tri.value(5, 4) == 3


def test_triangle_invariants():
    n_max = 40
    tri = triangle(n_max)
    for n in range(n_max + 1):
        row = tri.row(n)
        assert row[0] == 1 and row[n] == 1
        assert sum(row) == expected_total(n)
        for m, v in enumerate(row):
            assert (v * 2 ** (n - m)).denominator == 1
            assert 1 <= v <= comb(n, m)
            if 0 < m < n:
                assert v == tri.value(n - 1, m - 1) + Fraction(1, 2) * tri.value(n - 1, m)


def test_expected_length_examples():
    assert expected_length(7, 7) == 1
    assert expected_length(3, 1) == Fraction(7, 4)
    assert expected_length(4, 9) == 0


def test_expected_length_matches_triangle():
    tri = triangle(20)
    for n in range(21):
        for m in range(n + 1):
            assert expected_length(n, m) == tri.value(n, m)


def test_series_path_agrees():
    for n in range(16):
        for m in range(1, n + 1):
            assert expected_length_series(n, m) == expected_length(n, m)


def test_series_rejects_m_zero():
    with pytest.raises(DomainError):
        expected_length_series(5, 0)


def test_runs_identity():
    for n in range(1, 60):
        assert expected_length(n, n - 1) == Fraction(n + 1, 2)


def test_deficiency_polynomial_examples():
    assert deficiency_polynomial(0).coefficients == (1,)
    assert deficiency_polynomial(1).coefficients == (Fraction(1, 2), Fraction(1, 2))
    assert deficiency_polynomial(2).coefficients == (
        Fraction(1, 4),
        Fraction(1, 8),
        Fraction(1, 8),
    )


def test_deficiency_polynomial_guard():
    with pytest.raises(GuardExceeded):
        deficiency_polynomial(65)


@settings(max_examples=8, deadline=None)
@given(st.integers(min_value=0, max_value=7))
def test_deficiency_polynomial_matches_triangle(m):
    poly = deficiency_polynomial(m)
    assert poly.degree == m
    assert poly.leading_coefficient == Fraction(1, 2**m * factorial(m))
    tri = triangle(m + 50)
    for n in range(m, m + 51):
        assert poly(n) == tri.value(n, n - m)


def test_finite_differences_vanish():
    for m in range(7):
        tri = triangle(m + 50)
        values = [tri.value(n, n - m) for n in range(m, m + 51)]
        for _ in range(m + 1):
            values = [b - a for a, b in zip(values, values[1:])]
        assert all(v == 0 for v in values)


def test_binomial_approximation_examples():
    for n in range(20):
        r = binomial_approximation_report(n, 0)
        assert r.approximation == 1 and r.error == 0
    r = binomial_approximation_report(6, 2)
    assert r.approximation == Fraction(15, 4)
    assert r.exact == Fraction(11, 2)
    assert r.error == Fraction(7, 4)
    r = binomial_approximation_report(5, 1)
    assert r.approximation == Fraction(5, 2)
    assert r.error == Fraction(1, 2)


def test_binomial_approximation_domain():
    with pytest.raises(DomainError):
        binomial_approximation(3, 4)


def test_error_growth_degree_for_m2():
    # the gap below the binomial estimate at deficiency 2 is linear in n
    errors = [binomial_approximation_report(n, 2).error for n in range(2, 40)]
    second = [c - 2 * b + a for a, b, c in zip(errors, errors[1:], errors[2:])]
    assert all(d == 0 for d in second)
