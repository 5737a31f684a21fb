"""Exact distinct-subsequence counts and their expectations over random binary strings."""

from .counting import (
    RunDecomposition,
    census,
    count_length,
    count_length_run_recursive,
    count_total,
    count_total_run_recursive,
    runs,
)
from .errors import DomainError, GuardExceeded, LengthGuardExceeded, SubseqError
from .expectation import (
    BinomialApproxReport,
    ExpectationTriangle,
    RationalPolynomial,
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
from .montecarlo import (
    McEstimate,
    estimate_expected_length,
    estimate_expected_total,
    sample_string,
    worker_rng,
)
from .oracle import (
    SubsequenceSet,
    enumerate_distinct,
    exhaustive_expected_length,
    exhaustive_expected_total,
    is_subsequence,
)

__all__ = [
    "BinomialApproxReport",
    "DomainError",
    "ExpectationTriangle",
    "GuardExceeded",
    "LengthGuardExceeded",
    "McEstimate",
    "RationalPolynomial",
    "RunDecomposition",
    "SubseqError",
    "SubsequenceSet",
    "binomial_approximation",
    "binomial_approximation_report",
    "census",
    "count_length",
    "count_length_run_recursive",
    "count_total",
    "count_total_run_recursive",
    "deficiency_polynomial",
    "enumerate_distinct",
    "estimate_expected_length",
    "estimate_expected_total",
    "exhaustive_expected_length",
    "exhaustive_expected_total",
    "expected_length",
    "expected_length_series",
    "expected_total",
    "expected_total_recurrence",
    "expected_total_recurrence_values",
    "expected_total_series",
    "is_subsequence",
    "runs",
    "sample_string",
    "triangle",
    "worker_rng",
]
