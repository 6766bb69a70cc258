"""Accelerated Euler products and prime sums restricted to p = 3 mod 4.

Two engines:

1. ep3(w): prod_{p=3(4)} (1 - p^-w) for real w > 1 via the zeta/L(chi4)
   doubling identity
       T(w)^2 = [L(w,chi4) / (zeta(w)(1-2^-w))] * T(2w),
   iterated J times, with the level-J remainder evaluated as a short direct
   product (the exponent 2^J w makes primes beyond ~10^3 irrelevant).

2. character-twisted products/sums via prime zeta functions:
       P(s, chi) = sum_p chi(p) p^-s = sum_k mu(k)/k * Log L(ks, chi^k),
   and the restriction to p = 3 mod 4 by pairing chi with chi*chi4:
       P3(s, chi) = (P(s,chi) - P(s,chi*chi4) - chi(2) 2^-s) / 2.
   These give log prod_{p=3(4)}(1 - chi(p) p^-s) = -sum_m P3(ms, chi^m)/m
   with geometric (2^-ms) convergence and no square-root branch choices.
"""

from __future__ import annotations

from functools import lru_cache
from math import log

import cmath
import numpy as np

from . import characters as chars
from .errors import AccuracyError, ArgumentError

_MOBIUS = {}


def mobius(n: int) -> int:
    if n in _MOBIUS:
        return _MOBIUS[n]
    m, res, d = n, 1, 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                res = 0
                break
            res = -res
        d += 1
    else:
        if m > 1:
            res = -res
    _MOBIUS[n] = res
    return res


@lru_cache(maxsize=8)
def primes_up_to(n: int) -> np.ndarray:
    isp = np.ones(n + 1, dtype=bool)
    isp[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if isp[p]:
            isp[p * p :: p] = False
    return np.flatnonzero(isp)


@lru_cache(maxsize=8)
def primes_3mod4(n: int) -> np.ndarray:
    p = primes_up_to(n)
    return p[p % 4 == 3]


def ep3(w, depth_J: int = 6, tail_prime_bound: int = 1000):
    """prod over p = 3 mod 4 of (1 - p^-w), real w > 1 (scalar or array)."""
    if np.any(np.asarray(w) <= 1):
        raise ArgumentError("w must be > 1")
    if depth_J < 1:
        raise ArgumentError("depth_J >= 1 required")
    arraylike = np.ndim(w) > 0
    acc = 1.0
    for j in range(depth_J):
        u = (2**j) * w
        zeta = chars.zeta_real(u) if not arraylike else chars.hurwitz(u)
        ratio = dirichlet_chi4(u) / (zeta * (1 - 2.0 ** (-u)))
        acc = acc * ratio ** (1.0 / 2 ** (j + 1))
    u = np.minimum((2**depth_J) * w, 700.0)
    ps = primes_3mod4(tail_prime_bound).astype(float)
    with np.errstate(under="ignore"):
        if arraylike:
            tail = np.exp(np.sum(np.log1p(-ps[:, None] ** (-u[None, :])), axis=0))
        else:
            tail = float(np.prod(1 - ps ** (-u)))
    return acc * tail ** (1.0 / 2**depth_J)


def dirichlet_chi4(s) -> float:
    """L(s, chi4) = 4^-s (zeta(s,1/4) - zeta(s,3/4)), real; exact pi/4 at s=1.

    Accepts scalar or numpy-array s (no poles, so arrays need no special case).
    """
    if np.ndim(s) == 0 and s == 1:
        return np.pi / 4
    return 4.0 ** (-s) * (chars.hurwitz(s, 0.25) - chars.hurwitz(s, 0.75))


# ---------------------------------------------------------------------------
# prime zeta machinery (complex, character-twisted)

def _char_key(chi: chars.Character):
    return (chi.modulus, tuple(round(v.real, 12) + 1j * round(v.imag, 12) for v in chi.values))


class _LCache:
    def __init__(self):
        self._vals = {}

    def L(self, s: float, chi: chars.Character) -> complex:
        key = (round(s, 12), _char_key(chi))
        if key not in self._vals:
            self._vals[key] = complex(chars.dirichlet_L(s, chi))
        return self._vals[key]


def prime_zeta_char(s: float, chi: chars.Character, cache: _LCache | None = None,
                    tol: float = 1e-17) -> complex:
    """P(s, chi) = sum_p chi(p) p^-s for real s > 1.5 or so."""
    cache = cache or _LCache()
    total = 0j
    k = 1
    while 2.0 ** (-k * s) > tol or k <= 2:
        mu = mobius(k)
        if mu:
            L = cache.L(k * s, chi.power(k))
            total += mu / k * cmath.log(L)
        k += 1
        if k > 80:
            break
    return total


def prime_zeta_3mod4_char(s: float, chi: chars.Character,
                          cache: _LCache | None = None) -> complex:
    """P3(s, chi) = sum over p = 3 mod 4 of chi(p) p^-s."""
    cache = cache or _LCache()
    a = prime_zeta_char(s, chi, cache)
    b = prime_zeta_char(s, chi * chars.CHI4, cache)
    return (a - b - chi(2) * 2.0 ** (-s)) / 2


def prime_zeta_3mod4(s: float) -> float:
    """sum over p = 3 mod 4 of p^-s (trivial coefficients)."""
    return prime_zeta_3mod4_char(s, chars.TRIVIAL).real


def log_ep3_char(chi: chars.Character, s: float = 2.0) -> complex:
    """log prod_{p = 3 mod 4} (1 - chi(p) p^-s), via prime zeta sums."""
    cache = _LCache()
    total = 0j
    m = 1
    while 3.0 ** (-m * s) > 1e-18:
        total -= prime_zeta_3mod4_char(m * s, chi.power(m), cache) / m
        m += 1
        if m > 60:
            break
    return total


def ep3_char_inv_sqrt(chi: chars.Character, s: float = 2.0) -> complex:
    """prod_{p = 3 mod 4} (1 - chi(p) p^-s)^(-1/2), branch-free via exp/log."""
    return cmath.exp(-0.5 * log_ep3_char(chi, s))


# ---------------------------------------------------------------------------
# beta1 = 2 sum_{p = 3 mod 4} log p / (p^2 - 1), accelerated

def _vonmangoldt_ratio(s: float) -> float:
    """R(s) = sum over p = 3 mod 4, m odd of log p * p^-ms."""
    z, dz = chars.hurwitz(s, 1.0, derivative=True)
    L = dirichlet_chi4(s)
    dL = 4.0 ** (-s) * (
        chars.hurwitz(s, 0.25, derivative=True)[1]
        - chars.hurwitz(s, 0.75, derivative=True)[1]
    ) - log(4.0) * L
    return (-dz / z + dL / L - log(2.0) / (2.0**s - 1)) / 2


def _logp_zeta_3mod4(s: float) -> float:
    """Q3(s) = sum over p = 3 mod 4 of log p * p^-s (odd-k Moebius inversion)."""
    total = 0.0
    k = 1
    while 3.0 ** (-k * s) * 2 > 1e-18 or k <= 3:
        if k % 2 == 1 and mobius(k):
            total += mobius(k) * _vonmangoldt_ratio(k * s)
        k += 1
        if k > 61:
            break
    return total


def beta1() -> float:
    """2 sum_{p = 3 mod 4} log p / (p^2 - 1) to ~1e-14."""
    total = 0.0
    n = 1
    while True:
        term = _logp_zeta_3mod4(2.0 * n)
        total += term
        if n > 2 and term < 1e-18:
            break
        n += 1
        if n > 40:
            break
    return 2 * total


def beta1_direct(prime_bound: int = 10**6):
    """Truncated direct sum plus a tail bound: (value, tail_bound). Test oracle."""
    ps = primes_3mod4(prime_bound).astype(float)
    val = float(2 * np.sum(np.log(ps) / (ps * ps - 1)))
    tail = 2 * (log(prime_bound) + 1) / prime_bound
    return val, tail
