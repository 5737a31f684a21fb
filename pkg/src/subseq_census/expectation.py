"""Exact expectations over uniform random binary strings.

The central object is the Pascal-like triangle of expected length-m counts
E(n, m), built from

    E(n, m) = E(n-1, m-1) + (1/2) E(n-1, m),   E(n, 0) = E(n, n) = 1,

together with the total expectation 2*(3/2)^n - 1 and the deficiency
polynomials p_m with p_m(n) = E(n, n-m).  Every value is an exact
``fractions.Fraction``; no floating point enters this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator

from .errors import DomainError, GuardExceeded

HALF = Fraction(1, 2)

POLYNOMIAL_MAX_DEFICIENCY = 64
_POLY_VERIFY_POINTS = 10


@dataclass(frozen=True)
class ExpectationTriangle:
    """Rows n = 0..n_max of expected by-length subsequence counts."""

    n_max: int
    rows: tuple[tuple[Fraction, ...], ...]

    def row(self, n: int) -> tuple[Fraction, ...]:
        return self.rows[n]

    def value(self, n: int, m: int) -> Fraction:
        if m > n:
            return Fraction(0)
        return self.rows[n][m]


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense rational polynomial, coefficient i multiplies n^i."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) > 1 and self.coefficients[-1] == 0:
            raise ValueError("trailing coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1]

    def __call__(self, n: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * n + c
        return acc


def expected_total(n: int) -> Fraction:
    """Expected total count for length ``n``: 2*(3/2)^n - 1, exactly."""
    if n < 0:
        raise ValueError("string length must be nonnegative")
    return Fraction(2 * 3**n, 2**n) - 1


def expected_total_recurrence_values(n_max: int) -> Iterator[Fraction]:
    """Successive values of the recurrence x -> 1/2 + (3/2) x from 1."""
    x = Fraction(1)
    for _ in range(n_max + 1):
        yield x
        x = HALF + 3 * HALF * x


def expected_total_recurrence(n: int) -> Fraction:
    """Same value as :func:`expected_total` via the first-order recurrence."""
    if n < 0:
        raise ValueError("string length must be nonnegative")
    for x in expected_total_recurrence_values(n):
        pass
    return x


def expected_total_series(n: int) -> Fraction:
    """Same value via the run-conditioned sum.

    tot(j) = 1 + sum_{k=0}^{j-1} 2^{-k} tot(j-k-1); the truncation is
    exact because shorter suffixes simply do not occur.
    """
    if n < 0:
        raise ValueError("string length must be nonnegative")
    tot = [Fraction(1)]
    for j in range(1, n + 1):
        acc = Fraction(1)
        w = Fraction(1)
        for k in range(j):
            acc += w * tot[j - k - 1]
            w *= HALF
        tot.append(acc)
    return tot[n]


def _next_row(prev: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    n = len(prev)  # new row has n+1 entries
    new = [Fraction(1)]
    for m in range(1, n):
        new.append(prev[m - 1] + HALF * prev[m])
    new.append(Fraction(1))
    return tuple(new)


def triangle(n_max: int) -> ExpectationTriangle:
    """Full triangle of expected by-length counts for n = 0..n_max."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    rows = [(Fraction(1),)]
    for _ in range(n_max):
        rows.append(_next_row(rows[-1]))
    return ExpectationTriangle(n_max, tuple(rows))


def expected_length(n: int, m: int) -> Fraction:
    """Expected length-``m`` count for length ``n``; 0 when m > n.

    Uses a single rolling triangle row, O(n) memory.
    """
    if n < 0 or m < 0:
        raise ValueError("arguments must be nonnegative")
    if m > n:
        return Fraction(0)
    row: tuple[Fraction, ...] = (Fraction(1),)
    for _ in range(n):
        row = _next_row(row)
    return row[m]


def expected_length_series(n: int, m: int) -> Fraction:
    """Check path: E(n, m) = sum_{k=0}^{n-1} 2^{-k} E(n-k-1, m-1), m >= 1."""
    if m < 1:
        raise DomainError("series form needs a positive subsequence length")
    acc = Fraction(0)
    w = Fraction(1)
    for k in range(n):
        acc += w * expected_length(n - k - 1, m - 1)
        w *= HALF
    return acc


def _interpolate(points: list[tuple[int, Fraction]]) -> RationalPolynomial:
    # Newton's divided differences, then expansion to the monomial basis
    xs = [Fraction(x) for x, _ in points]
    coeffs = [y for _, y in points]
    for j in range(1, len(points)):
        for i in range(len(points) - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * len(points)
    poly[0] = coeffs[-1]
    for x, c in zip(reversed(xs[:-1]), reversed(coeffs[:-1])):
        for i in range(len(points) - 1, 0, -1):
            poly[i] = poly[i - 1] - x * poly[i]
        poly[0] = c - x * poly[0]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return RationalPolynomial(tuple(poly))


def deficiency_polynomial(m: int) -> RationalPolynomial:
    """The degree-``m`` polynomial giving E(n, n-m) for all n >= m.

    Interpolated through n = m..2m and re-verified on further points; the
    leading coefficient is checked against 1/(2^m * m!).
    """
    if m < 0:
        raise ValueError("deficiency must be nonnegative")
    if m > POLYNOMIAL_MAX_DEFICIENCY:
        raise GuardExceeded(
            f"deficiency polynomials are limited to m <= {POLYNOMIAL_MAX_DEFICIENCY}"
        )
    tri = triangle(2 * m + _POLY_VERIFY_POINTS)
    poly = _interpolate([(n, tri.value(n, n - m)) for n in range(m, 2 * m + 1)])
    for n in range(2 * m + 1, 2 * m + _POLY_VERIFY_POINTS + 1):
        if poly(n) != tri.value(n, n - m):
            raise ArithmeticError(f"interpolant for m={m} fails at n={n}")
    expected_lead = Fraction(1, 2**m * factorial(m))
    if poly.degree != m or poly.leading_coefficient != expected_lead:
        raise ArithmeticError(f"unexpected leading behaviour for m={m}")
    return poly


def binomial_approximation(n: int, m: int) -> Fraction:
    """The estimate 2^{-m} C(n, m) for E(n, n-m), exactly."""
    if n < 0 or m < 0:
        raise ValueError("arguments must be nonnegative")
    if m > n:
        raise DomainError(f"deficiency m={m} exceeds string length n={n}")
    return Fraction(comb(n, m), 2**m)


@dataclass(frozen=True)
class BinomialApproxReport:
    """Estimate, exact value, and their exact difference."""

    n: int
    m: int
    approximation: Fraction
    exact: Fraction
    error: Fraction


def binomial_approximation_report(n: int, m: int) -> BinomialApproxReport:
    approx = binomial_approximation(n, m)
    exact = expected_length(n, n - m)
    return BinomialApproxReport(n, m, approx, exact, exact - approx)
