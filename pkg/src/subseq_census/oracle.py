"""Brute-force ground truth.

Everything here is definitional: subsequence sets come from explicit
index-subset enumeration, and exhaustive expectations average over every
binary string of a given length.  Size guards keep accidental misuse from
turning into hour-long runs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import compress, product

from .counting import census
from .errors import LengthGuardExceeded

ENUMERATION_MAX_LENGTH = 24
SWEEP_MAX_LENGTH = 14
# up to here the exhaustive sweep re-enumerates every string; beyond, it
# trusts the (oracle-validated) census DP per string
SWEEP_ENUMERATION_CUTOFF = 12


@dataclass(frozen=True)
class SubsequenceSet:
    """All distinct subsequences of one source string."""

    elements: frozenset[str]
    source_length: int

    def by_length(self) -> list[int]:
        """Sizes of the length classes, index m = 0..source_length."""
        counts = Counter(len(t) for t in self.elements)
        return [counts.get(m, 0) for m in range(self.source_length + 1)]


def is_subsequence(t: str, s: str) -> bool:
    """Greedy left-to-right matcher."""
    it = iter(s)
    return all(c in it for c in t)


def _distinct_subsequences(s: str) -> frozenset[str]:
    n = len(s)
    if n <= 18:
        # table over masks: drop the highest set bit, append its symbol
        subs = [""] * (1 << n)
        for mask in range(1, 1 << n):
            h = mask.bit_length() - 1
            subs[mask] = subs[mask ^ (1 << h)] + s[h]
        return frozenset(subs)
    bits = [(1 << i) for i in range(n)]
    return frozenset(
        "".join(compress(s, (mask & b for b in bits))) for mask in range(1 << n)
    )


def enumerate_distinct(s: str) -> SubsequenceSet:
    """Set of all distinct subsequences, from all 2^n index subsets."""
    n = len(s)
    if n > ENUMERATION_MAX_LENGTH:
        raise LengthGuardExceeded(
            f"enumeration oracle is limited to length {ENUMERATION_MAX_LENGTH}, got {n}"
        )
    return SubsequenceSet(_distinct_subsequences(s), n)


@lru_cache(maxsize=None)
def _census_totals(n: int) -> tuple[int, ...]:
    # entry m: sum of the length-m counts over all 2^n binary strings
    totals = [0] * (n + 1)
    for bits in product("01", repeat=n):
        s = "".join(bits)
        if n <= SWEEP_ENUMERATION_CUTOFF:
            per_length = enumerate_distinct(s).by_length()
        else:
            per_length = census(s)
        for m, c in enumerate(per_length):
            totals[m] += c
    return tuple(totals)


def _check_sweep_guard(n: int) -> None:
    if n < 0:
        raise ValueError("string length must be nonnegative")
    if n > SWEEP_MAX_LENGTH:
        raise LengthGuardExceeded(
            f"exhaustive expectation is limited to length {SWEEP_MAX_LENGTH}, got {n}"
        )


def exhaustive_expected_total(n: int) -> Fraction:
    """Average total count over all 2^n binary strings, exactly."""
    _check_sweep_guard(n)
    return Fraction(sum(_census_totals(n)), 1 << n)


def exhaustive_expected_length(n: int, m: int) -> Fraction:
    """Average length-``m`` count over all 2^n binary strings, exactly."""
    _check_sweep_guard(n)
    if m < 0:
        raise ValueError("subsequence length must be nonnegative")
    if m > n:
        return Fraction(0)
    return Fraction(_census_totals(n)[m], 1 << n)
