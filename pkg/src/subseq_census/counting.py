"""Exact per-string counting of distinct subsequences.

Two independent algorithm families are provided and must agree:

* prefix DPs keyed on the last occurrence of each symbol
  (``count_total``, ``census``), and
* suffix recursions that jump over the initial run
  (``count_total_run_recursive``, ``count_length_run_recursive``).

All counts are exact Python ints and include the empty subsequence in the
total (it is the unique subsequence of length 0).  Strings may use any
alphabet of at most 256 distinct symbols; nothing here assumes binary.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class RunDecomposition:
    """Maximal constant substrings of a string, left to right."""

    lengths: tuple[int, ...]
    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.lengths) != len(self.symbols):
            raise ValueError("lengths and symbols must align")
        if any(k <= 0 for k in self.lengths):
            raise ValueError("run lengths must be positive")
        if any(a == b for a, b in zip(self.symbols, self.symbols[1:])):
            raise ValueError("adjacent runs must use distinct symbols")

    @property
    def source_length(self) -> int:
        return sum(self.lengths)


def runs(s: str) -> RunDecomposition:
    """Decompose ``s`` into its runs.  The empty string has no runs."""
    lengths: list[int] = []
    symbols: list[str] = []
    for c in s:
        if symbols and symbols[-1] == c:
            lengths[-1] += 1
        else:
            symbols.append(c)
            lengths.append(1)
    return RunDecomposition(tuple(lengths), tuple(symbols))


def count_total(s: str) -> int:
    """Number of distinct subsequences of ``s``, empty one included.

    Last-occurrence DP: with d_i the count for the length-i prefix,
    d_i = 2 d_{i-1} - d_{j-1} where j is the previous occurrence of
    s_{i-1} (no subtraction if the symbol is new).  O(n) bigint steps.
    """
    d = 1
    before_last: dict[str, int] = {}
    for c in s:
        nd = 2 * d - before_last.get(c, 0)
        before_last[c] = d
        d = nd
    return d


def _first_occurrences(s: str) -> list[tuple[int, ...]]:
    # entry i: first index >= i of each distinct symbol of s[i:]
    #
    # Branching on these deduplicates: a distinct subsequence may be
    # assumed to start at the first occurrence of its first symbol.  For
    # binary strings this is the run-jump argument: the entries at i are
    # exactly i itself and the end of the run containing i.
    n = len(s)
    first: dict[str, int] = {}
    table: list[tuple[int, ...]] = [()] * n
    for i in range(n - 1, -1, -1):
        first[s[i]] = i
        table[i] = tuple(first.values())
    return table


def count_total_run_recursive(s: str) -> int:
    """Same value as :func:`count_total` via the suffix recursion.

    C(suffix) = 1 + the sum of C(rest) over the first occurrence of each
    distinct symbol in the suffix; for binary strings this is the
    two-term run-jump recursion.  Tabulated over suffix start indices.
    """
    n = len(s)
    occurrences = _first_occurrences(s)
    c = [0] * (n + 1)
    c[n] = 1
    for i in range(n - 1, -1, -1):
        c[i] = 1 + sum(c[j + 1] for j in occurrences[i])
    return c[0]


def census(s: str) -> list[int]:
    """Counts of distinct subsequences of ``s`` by length, m = 0..n.

    2-D deduplicating DP: D[i][m] = D[i-1][m] + D[i-1][m-1] - D[j-1][m-1]
    with j the previous occurrence of s_{i-1}.  Entry 0 is always 1.
    """
    n = len(s)
    row = [1] + [0] * n
    snapshot: dict[str, list[int]] = {}
    for c in s:
        prev = snapshot.get(c)
        new = row[:]
        for m in range(n, 0, -1):
            new[m] = row[m] + row[m - 1] - (prev[m - 1] if prev is not None else 0)
        snapshot[c] = row
        row = new
    return row


def count_length(s: str, m: int) -> int:
    """Number of distinct length-``m`` subsequences of ``s``.

    Zero when m exceeds len(s); one when m == 0 or m == len(s).
    """
    if m < 0:
        raise ValueError("subsequence length must be nonnegative")
    if m > len(s):
        return 0
    return census(s)[m]


def count_length_run_recursive(s: str, m: int) -> int:
    """Cross-check path for :func:`count_length` via the suffix recursion.

    U_m(suffix) = sum of U_{m-1}(rest) over the first occurrence of each
    distinct symbol in the suffix (the two-term run-jump recursion, for
    binary strings); memoized on (suffix start, m).
    """
    if m < 0:
        raise ValueError("subsequence length must be nonnegative")
    n = len(s)
    if m > n:
        return 0
    occurrences = _first_occurrences(s)

    @lru_cache(maxsize=None)
    def u(i: int, k: int) -> int:
        if k == 0:
            return 1
        if k > n - i:
            return 0
        return sum(u(j + 1, k - 1) for j in occurrences[i])

    try:
        return u(0, m)
    finally:
        u.cache_clear()
