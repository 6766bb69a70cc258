"""Sieve correctness: exhaustive membership, segment independence, caching."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from twosquares import sieve
from twosquares.errors import ArgumentError

def brute_two_squares_set(limit: int) -> set:
    """{a^2 + b^2 <= limit}, by exhaustive double loop (independent oracle)."""
    out = set()
    a = 0
    while a * a <= limit:
        b = a
        while a * a + b * b <= limit:
            out.add(a * a + b * b)
            b += 1
        a += 1
    return out


BRUTE_1E5 = None


def _brute():
    global BRUTE_1E5
    if BRUTE_1E5 is None:
        BRUTE_1E5 = brute_two_squares_set(10**5)
    return BRUTE_1E5


def test_membership_exhaustive_1e5():
    seg = sieve.sieve_segment(0, 10**5)
    vals = set(seg.values().tolist())
    assert vals == _brute()


@given(st.integers(min_value=0, max_value=10**5))
def test_is_sum_of_two_squares_matches_brute(n):
    assert sieve.is_sum_of_two_squares(n) == (n in _brute())


@given(st.integers(min_value=0, max_value=5 * 10**4),
       st.integers(min_value=1, max_value=5 * 10**4))
@settings(max_examples=25, deadline=None)
def test_segment_independence(lo, width):
    hi = lo + width
    big = sieve.sieve_segment(0, 10**5)
    small = sieve.sieve_segment(lo, hi)
    big_vals = big.values()
    expect = big_vals[(big_vals >= lo) & (big_vals <= hi)]
    assert np.array_equal(small.values(), expect)


def test_enumerate_small_examples():
    vals = np.concatenate(list(sieve.enumerate_up_to(10)))
    assert vals[vals <= 10].tolist() == [1, 2, 4, 5, 8, 9, 10]
    start = np.concatenate(list(sieve.enumerate_up_to(1)))[:2]
    assert start.tolist() == [1, 2]  # the stream past x=1 starts 1, 2
    # successor of the last in-range element 25 is 26 = 5^2 + 1^2
    stream = []
    for vals in sieve.stream_with_successors(25, r=2):
        stream.extend(vals.tolist())
    assert 25 in stream and 26 in stream


def test_count_monotone_and_known_values():
    counts = [sieve.count_up_to(x) for x in (10, 100, 1000, 10**4, 10**5)]
    assert counts == sorted(counts)
    assert counts[0] == 7
    assert sieve.count_up_to(10**6) == 216341
    # 0 = 0^2 + 0^2 is a member but excluded from default counts
    assert sieve.count_up_to(10**6, include_zero=True) == 216342


def test_small_segments_agree_with_one_big_segment():
    one = sum(seg.count() for seg in sieve.iter_segments(1, 10**6))
    many = sum(seg.count() for seg in
               sieve.iter_segments(1, 10**6, segment_budget=2**17))
    assert one == many == 216341


def test_threads_deterministic():
    a = sieve.count_up_to(10**6, threads=1)
    b = sieve.count_up_to(10**6, threads=4)
    assert a == b


def test_cache_roundtrip(tmp_path):
    d = str(tmp_path)
    a = sieve.count_up_to(10**6, cache_dir=d)
    files = list(tmp_path.iterdir())
    assert files, "cache files should be written"
    b = sieve.count_up_to(10**6, cache_dir=d)  # served from cache
    assert a == b == 216341


def test_argument_errors():
    with pytest.raises(ArgumentError):
        sieve.count_up_to(-1)
    assert sieve.count_up_to(0) == 0
    assert sieve.count_up_to(0, include_zero=True) == 1
    with pytest.raises(ArgumentError):
        sieve.sieve_segment(10, 5)
