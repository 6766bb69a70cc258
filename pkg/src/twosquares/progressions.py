"""Residue-class statistics of consecutive E-elements.

N(x;q,a), the pair matrix N(x;q,(a,b)), r-tuple counts N(x;q,avec) and gap
histograms, all computed in one linear pass over the segmented sieve stream.
Only E_n <= x starts a pair/tuple; its successors may exceed x (they are pulled
from the sieve overshoot window).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import sieve
from .errors import ArgumentError, ResourceError

DENSE_CELLS_LIMIT = 5 * 10**7  # refuse q^r tables larger than this


def _check_modulus(q: int) -> None:
    if q < 2 or any(q % d == 0 for d in range(2, int(q**0.5) + 1)):
        raise ArgumentError(f"q={q} must be prime")
    if q % 4 != 1:
        raise ArgumentError(f"q={q} must be = 1 mod 4")


@dataclass
class ResidueCountMatrix:
    q: int
    r: int
    x: int
    counts: np.ndarray  # shape (q,)*r, int64

    def cell(self, *a) -> int:
        return int(self.counts[tuple(ai % self.q for ai in a)])

    def total(self) -> int:
        return int(self.counts.sum())

    def as_dict(self) -> dict:
        out = {}
        it = np.nditer(self.counts, flags=["multi_index"])
        for v in it:
            out[it.multi_index if self.r > 1 else it.multi_index[0]] = int(v)
        return out


def count_by_residue(x: int, q: int, **sieve_kw) -> ResidueCountMatrix:
    """cell a = #{n <= x : n in E, n = a mod q}."""
    _check_modulus(q)
    counts = np.zeros(q, dtype=np.int64)
    if x >= 1:
        for seg in sieve.iter_segments(1, x, **sieve_kw):
            vals = seg.values()
            counts += np.bincount(vals % q, minlength=q)
    return ResidueCountMatrix(q=q, r=1, x=x, counts=counts)


def count_consecutive_tuples(x: int, q: int, r: int, max_r: int = 6,
                             **sieve_kw) -> ResidueCountMatrix:
    """cell (a_1..a_r) = #{E_n <= x : E_{n+i-1} = a_i mod q for 1 <= i <= r}."""
    _check_modulus(q)
    if x < 1:
        raise ArgumentError("x must be >= 1")
    if not 1 <= r <= max_r:
        raise ArgumentError(f"r={r} outside [1, {max_r}]")
    if r == 1:
        return count_by_residue(x, q, **sieve_kw)
    if q**r > DENSE_CELLS_LIMIT:
        raise ResourceError(f"q^r = {q**r} cells exceeds {DENSE_CELLS_LIMIT}")
    counts = np.zeros(q**r, dtype=np.int64)
    carry = np.empty(0, dtype=np.int64)  # last r-1 values of the stream so far
    powers = q ** np.arange(r - 1, -1, -1, dtype=np.int64)
    for vals in sieve.stream_with_successors(x, r=r, **sieve_kw):
        seq = np.concatenate([carry, vals])
        if seq.size >= r:
            res = seq % q
            starts = seq[: seq.size - r + 1]
            mask = starts <= x
            if mask.any():
                code = np.zeros(starts.size, dtype=np.int64)
                for i in range(r):
                    code += res[i : i + starts.size] * powers[i]
                counts += np.bincount(code[mask], minlength=q**r)
        carry = seq[-(r - 1):]
    return ResidueCountMatrix(q=q, r=r, x=x, counts=counts.reshape((q,) * r))


def count_consecutive_pairs(x: int, q: int, **sieve_kw) -> ResidueCountMatrix:
    return count_consecutive_tuples(x, q, r=2, **sieve_kw)


def residue_pair_stats(x: int, q: int, **sieve_kw):
    """(singles, pairs) matrices in a single sieve pass (shared heavy runs)."""
    _check_modulus(q)
    singles = np.zeros(q, dtype=np.int64)
    pairs = np.zeros(q * q, dtype=np.int64)
    carry = np.empty(0, dtype=np.int64)
    for vals in sieve.stream_with_successors(x, r=2, **sieve_kw):
        singles += np.bincount(vals[vals <= x] % q, minlength=q)
        seq = np.concatenate([carry, vals])
        if seq.size >= 2:
            left, right = seq[:-1], seq[1:]
            mask = left <= x
            pairs += np.bincount((left[mask] % q) * q + right[mask] % q, minlength=q * q)
        carry = seq[-1:]
    return (
        ResidueCountMatrix(q=q, r=1, x=x, counts=singles),
        ResidueCountMatrix(q=q, r=2, x=x, counts=pairs.reshape(q, q)),
    )


def gap_histogram(x: int, **sieve_kw) -> dict[int, int]:
    """Histogram of E_{n+1} - E_n over E_n <= x."""
    if x < 2:
        raise ArgumentError("x must be >= 2")
    acc = np.zeros(0, dtype=np.int64)
    carry = np.empty(0, dtype=np.int64)
    for vals in sieve.stream_with_successors(x, r=2, **sieve_kw):
        seq = np.concatenate([carry, vals])
        if seq.size >= 2:
            gaps = np.diff(seq)[seq[:-1] <= x]
            if gaps.size:
                h = np.bincount(gaps)
                if h.size > acc.size:
                    h[: acc.size] += acc
                    acc = h
                else:
                    acc[: h.size] += h
        carry = seq[-1:]
    return {int(g): int(c) for g, c in enumerate(acc) if c}
