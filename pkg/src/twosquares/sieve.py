"""Segmented sieve for E = {a^2 + b^2 : a, b >= 0}.

Membership is generated directly: for every a <= sqrt(hi) we mark a^2 + b^2
inside the segment (roughly pi/4 * (hi-lo) writes per segment, done with numpy
fancy indexing).  No factorization tables are needed, and distinct segments are
independent, so segments can be sieved concurrently and merged.

Counts N(x; ...) range over 1 <= n <= x by default; 0 = 0^2+0^2 is a member of
E but is excluded from counts unless include_zero is requested (the convention
that matches the reference counts, e.g. count(10^9) = 173229059).
"""

from __future__ import annotations

import os
import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import ArgumentError, ResourceError, TruncatedStreamError

DEFAULT_SEGMENT_BITS = 1 << 26  # max entries per segment
DEFAULT_OVERSHOOT = 10**6

_CACHE_MAGIC = b"S2SQ1"


@dataclass(frozen=True)
class SieveSegment:
    """Bitset over [lo, hi]; bits[i] <=> lo + i in E."""

    lo: int
    hi: int
    bits: np.ndarray  # bool array of length hi - lo + 1

    def count(self, include_zero: bool = False) -> int:
        n = int(np.count_nonzero(self.bits))
        if not include_zero and self.lo == 0 and self.bits[0]:
            n -= 1
        return n

    def values(self) -> np.ndarray:
        """Ascending int64 array of the E-elements in [lo, hi]."""
        return np.flatnonzero(self.bits).astype(np.int64) + self.lo

    def to_bytes(self) -> bytes:
        words = np.packbits(self.bits, bitorder="little").tobytes()
        pad = (-len(words)) % 8  # little-endian 64-bit words, low bit = lo
        return _CACHE_MAGIC + struct.pack("<QQ", self.lo, self.hi) + words + b"\0" * pad

    @classmethod
    def from_bytes(cls, blob: bytes) -> "SieveSegment":
        if blob[:5] != _CACHE_MAGIC:
            raise ArgumentError("bad cache header (expected S2SQ1)")
        lo, hi = struct.unpack("<QQ", blob[5:21])
        n = hi - lo + 1
        bits = np.unpackbits(
            np.frombuffer(blob[21:], dtype=np.uint8), bitorder="little", count=n
        ).astype(bool)
        return cls(lo, hi, bits)


def sieve_segment(lo: int, hi: int, segment_budget: int = DEFAULT_SEGMENT_BITS) -> SieveSegment:
    """E-membership bitset for [lo, hi] by direct a^2+b^2 marking (a <= b)."""
    if lo > hi:
        raise ArgumentError(f"lo={lo} > hi={hi}")
    if lo < 0:
        raise ArgumentError("lo must be >= 0")
    if hi - lo + 1 > segment_budget:
        raise ResourceError(f"segment of {hi - lo + 1} entries exceeds budget {segment_budget}")
    bits = np.zeros(hi - lo + 1, dtype=bool)
    amax = isqrt(hi // 2)  # a <= b forces 2a^2 <= hi
    for a in range(amax + 1):
        a2 = a * a
        rem_lo = lo - a2
        bmin = a
        if rem_lo > 0:
            r = isqrt(rem_lo)
            if r * r < rem_lo:
                r += 1
            bmin = max(bmin, r)
        bmax = isqrt(hi - a2)
        if bmin > bmax:
            continue
        b = np.arange(bmin, bmax + 1, dtype=np.int64)
        bits[a2 + b * b - lo] = True
    return SieveSegment(lo, hi, bits)


def _segment_ranges(lo: int, hi: int, segment_budget: int):
    start = lo
    while start <= hi:
        end = min(start + segment_budget - 1, hi)
        yield start, end
        start = end + 1


def _cached_segment(lo: int, hi: int, segment_budget: int, cache_dir: str | None) -> SieveSegment:
    if cache_dir is None:
        return sieve_segment(lo, hi, segment_budget)
    path = os.path.join(cache_dir, f"s2sq_{lo}_{hi}.bin")
    if os.path.exists(path):
        with open(path, "rb") as fh:
            return SieveSegment.from_bytes(fh.read())
    seg = sieve_segment(lo, hi, segment_budget)
    os.makedirs(cache_dir, exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "wb") as fh:
        fh.write(seg.to_bytes())
    os.replace(tmp, path)  # checkpoint per segment so interrupted runs resume
    return seg


def iter_segments(lo: int, hi: int, segment_budget: int = DEFAULT_SEGMENT_BITS,
                  cache_dir: str | None = None, threads: int = 1):
    """Yield segments covering [lo, hi] in order; sieve ahead with a pool when threads > 1."""
    ranges = list(_segment_ranges(lo, hi, segment_budget))
    if threads <= 1 or len(ranges) <= 1:
        for a, b in ranges:
            yield _cached_segment(a, b, segment_budget, cache_dir)
        return
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futs = [pool.submit(_cached_segment, a, b, segment_budget, cache_dir) for a, b in ranges]
        for fut in futs:
            yield fut.result()


def is_sum_of_two_squares(n: int) -> bool:
    """True iff n = a^2 + b^2, i.e. v_p(n) is even for every prime p = 3 mod 4."""
    if n < 0:
        raise ArgumentError("n must be >= 0")
    if n <= 2:
        return True
    while n % 2 == 0:
        n //= 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if p % 4 == 3 and e % 2 == 1:
                return False
        p += 2
    return n % 4 != 3


def enumerate_up_to(x: int, overshoot: int = DEFAULT_OVERSHOOT,
                    segment_budget: int = DEFAULT_SEGMENT_BITS,
                    cache_dir: str | None = None, threads: int = 1):
    """Yield E-elements of [1, x + overshoot] ascending, in numpy batches.

    Consumers that need the successor of the last element <= x must check for
    it themselves; values() past x are included up to x + overshoot.
    """
    if x < 1:
        raise ArgumentError("x must be >= 1")
    for seg in iter_segments(1, x + overshoot, segment_budget, cache_dir, threads):
        yield seg.values()


def count_up_to(x: int, include_zero: bool = False,
                segment_budget: int = DEFAULT_SEGMENT_BITS,
                cache_dir: str | None = None, threads: int = 1) -> int:
    """#{1 <= n <= x : n in E} (plus one for n=0 when include_zero)."""
    if x < 0:
        raise ArgumentError("x must be >= 0")
    total = 1 if include_zero else 0
    if x == 0:
        return total
    for seg in iter_segments(1, x, segment_budget, cache_dir, threads):
        total += int(np.count_nonzero(seg.bits))
    return total


def stream_with_successors(x: int, r: int = 2, overshoot: int = DEFAULT_OVERSHOOT,
                           segment_budget: int = DEFAULT_SEGMENT_BITS,
                           cache_dir: str | None = None, threads: int = 1):
    """Yield value batches covering E cap [1, x] plus >= r-1 elements beyond x.

    Raises TruncatedStreamError if the overshoot window does not contain the
    required successors of the last in-range element.
    """
    beyond = 0
    last = None
    for vals in enumerate_up_to(x, overshoot, segment_budget, cache_dir, threads):
        if vals.size == 0:
            continue
        yield vals
        last = int(vals[-1])
        beyond += int(np.count_nonzero(vals > x))
        if beyond >= r - 1:
            return
    if beyond < r - 1:
        raise TruncatedStreamError(
            f"needed {r - 1} successors beyond x={x} within overshoot, found {beyond}",
            last_resolved=last,
        )
