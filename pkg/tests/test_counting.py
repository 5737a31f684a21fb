"""Per-string counting: frozen examples plus structural properties."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subseq_census import (
    census,
    count_length,
    count_length_run_recursive,
    count_total,
    count_total_run_recursive,
    enumerate_distinct,
    runs,
)

binary = st.text(alphabet="01", max_size=14)
general = st.text(
    alphabet=st.characters(min_codepoint=32, max_codepoint=126), max_size=12
)


def test_runs_examples():
    assert runs("") == runs("")
    assert runs("").lengths == ()
    assert runs("0011").lengths == (2, 2)
    assert runs("0011").symbols == ("0", "1")
    assert runs("0100").lengths == (1, 1, 2)
    assert runs("0100").symbols == ("0", "1", "0")


def test_count_total_examples():
    assert count_total("") == 1
    assert count_total("11") == 3
    assert count_total("0101") == 12


def test_run_recursive_examples():
    assert count_total_run_recursive("") == 1
    assert count_total_run_recursive("01") == 4
    assert count_total_run_recursive("0101") == 12


def test_count_length_examples():
    assert count_length("", 0) == 1
    assert count_length("0011", 2) == 3
    assert count_length("010", 2) == 3
    assert count_length("0101", 5) == 0
    assert count_length_run_recursive("0011", 2) == 3
    assert count_length_run_recursive("0101", 5) == 0


def test_census_examples():
    assert census("") == [1]
    assert census("11") == [1, 1, 1]
    assert census("0101") == [1, 2, 4, 4, 1]
    assert sum(census("0101")) == 12


def test_negative_length_rejected():
    with pytest.raises(ValueError):
        count_length("01", -1)
    with pytest.raises(ValueError):
        count_length_run_recursive("01", -1)


@given(binary)
def test_algorithms_agree(s):
    total = count_total(s)
    assert count_total_run_recursive(s) == total
    assert sum(census(s)) == total


@given(general)
def test_algorithms_agree_general_alphabet(s):
    total = count_total(s)
    assert count_total_run_recursive(s) == total
    assert sum(census(s)) == total


@given(binary)
def test_length_paths_agree(s):
    cen = census(s)
    for m in range(len(s) + 2):
        expected = cen[m] if m <= len(s) else 0
        assert count_length(s, m) == expected
        assert count_length_run_recursive(s, m) == expected


@settings(max_examples=60)
@given(st.text(alphabet="01", max_size=10))
def test_matches_enumeration_oracle(s):
    assert census(s) == enumerate_distinct(s).by_length()


@given(binary)
def test_bounds(s):
    n = len(s)
    assert 1 <= count_total(s) <= 2**n
    cen = census(s)
    from math import comb

    for m, c in enumerate(cen):
        assert c <= comb(n, m)
    assert cen[n] == 1
    assert cen[0] == 1


@given(binary, st.sampled_from("01"))
def test_appending_never_decreases_total(s, c):
    assert count_total(s + c) >= count_total(s)


@given(st.integers(min_value=0, max_value=40), st.sampled_from("01"))
def test_constant_strings(n, c):
    s = c * n
    assert count_total(s) == n + 1
    assert census(s) == [1] * (n + 1)


@given(st.lists(st.integers(min_value=1, max_value=4), max_size=6))
def test_counts_depend_only_on_run_structure(lengths):
    a = "".join(("01"[i % 2]) * k for i, k in enumerate(lengths))
    b = "".join(("10"[i % 2]) * k for i, k in enumerate(lengths))
    assert count_total(a) == count_total(b)
    assert census(a) == census(b)


@given(binary)
def test_runs_roundtrip(s):
    dec = runs(s)
    assert dec.source_length == len(s)
    rebuilt = "".join(c * k for c, k in zip(dec.symbols, dec.lengths))
    assert rebuilt == s
