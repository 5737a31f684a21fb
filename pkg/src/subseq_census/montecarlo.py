"""Monte Carlo cross-checks of the exact expectations.

Strings are sampled with numpy's counter-based Philox generator so runs
are reproducible bit-for-bit from (seed, worker partitioning) alone: each
worker owns the stream keyed by (seed, worker index), and per-sample
counts are accumulated as exact integers before any decimal conversion,
so results do not depend on completion order.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional

import numpy as np

from .counting import census, count_total
from .errors import DomainError

RNG_ID = "numpy-philox4x64"
WORKER_ENV_VAR = "SUBSEQ_CENSUS_THREADS"
SUMMARY_DIGITS = 40


@dataclass(frozen=True)
class McEstimate:
    """Sample mean with normal-approximation 95% interval."""

    n: int
    m: Optional[int]
    samples: int
    seed: int
    workers: int
    rng_id: str
    mean: Decimal
    std_error: Decimal
    ci95_low: Decimal
    ci95_high: Decimal

    def covers(self, exact: Fraction) -> bool:
        with localcontext() as ctx:
            ctx.prec = SUMMARY_DIGITS
            v = Decimal(exact.numerator) / Decimal(exact.denominator)
        return self.ci95_low <= v <= self.ci95_high


def worker_rng(seed: int, worker_index: int) -> np.random.Generator:
    """Independent stream for one worker, keyed by (seed, worker index)."""
    key = (seed % 2**64) * 2**64 + worker_index
    return np.random.Generator(np.random.Philox(key=key))


def sample_string(n: int, rng: np.random.Generator) -> str:
    """Uniform random binary string of length ``n``; consumes n draws."""
    if n == 0:
        return ""
    bits = rng.integers(0, 2, size=n, dtype=np.uint8)
    return (bits + ord("0")).tobytes().decode("ascii")


def max_workers() -> int:
    cap = os.environ.get(WORKER_ENV_VAR)
    return max(1, int(cap)) if cap else os.cpu_count() or 1


def _partition(samples: int, workers: int) -> list[int]:
    base, extra = divmod(samples, workers)
    return [base + (1 if w < extra else 0) for w in range(workers)]


def _worker_sums(n: int, m: Optional[int], seed: int, worker_index: int,
                 count: int) -> tuple[int, int]:
    rng = worker_rng(seed, worker_index)
    total = 0
    total_sq = 0
    for _ in range(count):
        s = sample_string(n, rng)
        c = count_total(s) if m is None else census(s)[m]
        total += c
        total_sq += c * c
    return total, total_sq


def _estimate(n: int, m: Optional[int], samples: int, seed: int,
              workers: Optional[int]) -> McEstimate:
    if samples < 2:
        raise DomainError("at least 2 samples are required")
    # the requested worker count fixes the partitioning (and hence the
    # result); the env var only caps how many processes run at once
    workers = min(workers or 1, samples)
    sizes = _partition(samples, workers)
    jobs = [(n, m, seed, w, sizes[w]) for w in range(workers) if sizes[w] > 0]
    pool_size = min(len(jobs), max_workers())
    if len(jobs) > 1 and pool_size > 1:
        with ProcessPoolExecutor(max_workers=pool_size) as pool:
            parts = list(pool.map(_worker_sums, *zip(*jobs)))
    else:
        parts = [_worker_sums(*job) for job in jobs]
    total = sum(p[0] for p in parts)
    total_sq = sum(p[1] for p in parts)
    with localcontext() as ctx:
        ctx.prec = SUMMARY_DIGITS
        k = Decimal(samples)
        mean = Decimal(total) / k
        # unbiased sample variance from the exact sums
        var_num = Decimal(samples * total_sq - total * total)
        variance = var_num / (k * (k - 1))
        if variance < 0:  # exact sums make this impossible, but be safe
            variance = Decimal(0)
        std_error = (variance / k).sqrt()
        half_width = Decimal("1.959963984540054235524594430520551527955") * std_error
        return McEstimate(
            n=n, m=m, samples=samples, seed=seed, workers=workers,
            rng_id=RNG_ID, mean=mean, std_error=std_error,
            ci95_low=mean - half_width, ci95_high=mean + half_width,
        )


def estimate_expected_total(n: int, samples: int, seed: int,
                            workers: Optional[int] = None) -> McEstimate:
    """Estimate the expected total count at length ``n``."""
    if n < 0:
        raise ValueError("string length must be nonnegative")
    return _estimate(n, None, samples, seed, workers)


def estimate_expected_length(n: int, m: int, samples: int, seed: int,
                             workers: Optional[int] = None) -> McEstimate:
    """Estimate the expected length-``m`` count at length ``n``."""
    if n < 0 or m < 0:
        raise ValueError("arguments must be nonnegative")
    if m > n:
        raise DomainError(f"m={m} exceeds n={n}; that expectation is identically 0")
    return _estimate(n, m, samples, seed, workers)
