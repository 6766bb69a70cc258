"""Integral-form main terms evaluated by Gauss-Legendre quadrature.

Three integrals over sigma in (1/2 + eps, 1), all with an endpoint factor
|sigma - 1|^{-1/2} that the substitution sigma = 1 - u^2 removes exactly
(d sigma = -2u du cancels the singularity):

  * the counting integral
        (1/pi) int G(sigma) x^sigma / (sigma |sigma-1|^{1/2}) d sigma,
    G(s) = (zeta(s)(s-1))^{1/2} L(s,chi4)^{1/2} (1-2^-s)^{-1/2}
           prod_{p=3(4)} (1-p^{-2s})^{-1/2};

  * the weighted singular-series sum S(q,v;H),
        v != 0: H/q + rho(q,v)
                + (1/(2 pi K^2 phi(q))) int F_chi0(sigma) H^{sigma-1} / |sigma-1|^{1/2},
        v  = 0: H/q + (1/(pi K^2)) int [F'(sigma)
                + F(sigma)(log H - A_q(sigma)/2)] H^{sigma-1} / |sigma-1|^{1/2},
    with F(s) = zeta(s-1) M(s-1) [(s-1) zeta(s)]^{1/2} Gamma(s),
    F_chi0(s) = A_q(s) F(s), A_q(s) = (1 - q^{-(s-1)})/(s-1);

  * the k-tuple average
        H^k + (k(k-1) H^{k-1}/(pi K^2)) int [F'(sigma) + F(sigma) log H]
              H^{sigma-1} / |sigma-1|^{1/2},
    with the variant F(s) = zeta(s-1) M(s-1) [(s-1) zeta(s)]^{1/2} / s.

F' is a numeric derivative (central differences + Richardson); near 1/2 it
blows up like (sigma - 1/2)^{-5/4}, so the v=0 and k-tuple integrals depend
visibly on eps, which is always reported alongside the value.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import log, pi, sqrt

from scipy.special import gamma as gamma_vec

import numpy as np

from . import characters as chars
from . import constants, eulerprod as ep
from .errors import AccuracyError, ArgumentError


@dataclass(frozen=True)
class QuadratureConfig:
    epsilon: float = 0.02  # 0 means: integrate to the 1/2 endpoint (quartic substitution)
    nodes: int = 64
    substitution: str = "sqrt_endpoint"
    derivative_steps: int = 4  # Richardson levels for F'
    rel_target: float = 1e-8   # node-doubling agreement

    def __post_init__(self):
        if not (self.epsilon == 0.0 or 0.01 <= self.epsilon < 0.5):
            raise ArgumentError("epsilon must be 0 or lie in [0.01, 0.5)")
        if self.substitution != "sqrt_endpoint":
            raise ArgumentError("only the sqrt_endpoint substitution is wired")
        if self.nodes < 4:
            raise ArgumentError("nodes >= 4 required")


# ---------------------------------------------------------------------------
# special functions on the real interval (1/2, 1]

def G_fn(s):
    """(zeta(s)(s-1))^{1/2} L(s,chi4)^{1/2} (1-2^-s)^{-1/2} prod(1-p^-2s)^{-1/2}.

    Vectorized over numpy arrays of s in (1/2, 1]; G ~ (2s-1)^{-1/4} near 1/2.
    """
    reg = chars.zeta_real(s, regularized=True)  # zeta(s)(s-1) > 0 on (1/2, 1]
    rad = reg * ep.dirichlet_chi4(s) / (1 - 2.0 ** (-s)) / ep.ep3(2 * s)
    if np.any(np.asarray(rad) <= 0):
        raise AccuracyError(f"G radicand <= 0 on the node set")
    return np.sqrt(rad)


def _core(s):
    """zeta(s-1) M(s-1) [(s-1) zeta(s)]^{1/2}, shared by both F variants."""
    reg = chars.zeta_real(s, regularized=True)  # = (s-1) zeta(s)
    if np.any(np.asarray(reg) <= 0):
        raise AccuracyError("(s-1) zeta(s) <= 0 on the node set")
    return chars.zeta_real(s - 1) * constants._M_of_s(s - 1) * np.sqrt(reg)


def F_gamma(s):
    """F(s) with the Gamma(s) normalization (weighted-sum integrals)."""
    return _core(s) * gamma_vec(s)


def F_inv(s):
    """F(s) with the 1/s normalization (k-tuple average integral)."""
    return _core(s) / s


def A_q(s, q: int):
    """(1 - q^{-(s-1)})/(s-1), with the removable limit log q at s=1."""
    t = np.asarray(s, dtype=float) - 1
    lq = log(q)
    small = np.abs(t) < 1e-7
    safe = np.where(small, 1.0, t)
    out = np.where(small, lq - t * lq * lq / 2, (1 - q ** (-safe)) / safe)
    return out if np.ndim(s) > 0 else float(out)


def F_chi0(s, q: int):
    return A_q(s, q) * F_gamma(s)


def _richardson_derivative(f, s, h0: float, levels: int):
    """f'(s) by central differences, Richardson-extrapolated in h^2."""
    rows = []
    for i in range(levels):
        h = h0 / 2**i
        rows.append([(f(s + h) - f(s - h)) / (2 * h)])
        for k in range(1, i + 1):
            fac = 4.0**k
            rows[i].append((fac * rows[i][k - 1] - rows[i - 1][k - 1]) / (fac - 1))
    return rows[-1][-1]


def F_gamma_prime(s, levels: int = 4, h0: float = 1e-3):
    return _richardson_derivative(F_gamma, s, h0, levels)


def F_inv_prime(s, levels: int = 4, h0: float = 1e-3):
    return _richardson_derivative(F_inv, s, h0, levels)


# ---------------------------------------------------------------------------
# quadrature core

@lru_cache(maxsize=64)
def _gl_nodes(n: int, lo: float, hi: float):
    x, w = np.polynomial.legendre.leggauss(n)
    mid, half = (hi + lo) / 2, (hi - lo) / 2
    return mid + half * x, half * w


def _panel_nodes(eps: float, n: int):
    """Nodes/weights for int_{1/2+eps}^1 fn(sigma)/|sigma-1|^{1/2} d sigma.

    Upper panel (3/4, 1): sigma = 1 - u^2 removes the explicit endpoint factor.
    Lower panel (1/2+eps, 3/4]: plain Gauss-Legendre when eps > 0; for eps = 0
    the substitution sigma = 1/2 + t^4 absorbs the integrand's own
    (sigma - 1/2)^{-1/4}-type growth at the left endpoint.
    """
    if eps >= 0.25:  # no lower panel; one substituted panel reaches 1/2+eps
        u, wu = _gl_nodes(n, 0.0, sqrt(0.5 - eps))
        return 1 - u * u, 2 * wu
    u, wu = _gl_nodes(n, 0.0, 0.5)
    sig = 1 - u * u
    w = 2 * wu
    if eps > 0:
        s2, w2 = _gl_nodes(n, 0.5 + eps, 0.75)
        sig = np.concatenate([sig, s2])
        w = np.concatenate([w, w2 / np.sqrt(1 - s2)])
    else:
        t, wt = _gl_nodes(n, 0.0, 0.25**0.25)
        # clamp: t^4 below ~1e-13 is lost to rounding in 0.5 + t^4 and the
        # evaluators need sigma > 1/2 strictly; the skipped mass is O(1e-10)
        s2 = np.maximum(0.5 + t**4, 0.5 + 1e-13)
        sig = np.concatenate([sig, s2])
        w = np.concatenate([w, 4 * t**3 * wt / np.sqrt(1 - s2)])
    return sig, w


def _integrate(fn, eps: float, nodes: int, rel_target: float) -> float:
    """int_{1/2+eps}^1 fn(sigma)/|sigma-1|^{1/2} d sigma, node-doubling checked."""

    def total(n: int) -> float:
        sig, w = _panel_nodes(eps, n)
        return float(np.dot(w, fn(sig)))

    coarse, fine = total(nodes), total(2 * nodes)
    if abs(fine - coarse) > rel_target * max(abs(fine), 1e-300):
        raise AccuracyError(
            f"node doubling {nodes}->{2*nodes} disagrees: {coarse} vs {fine}",
            partial=fine)
    return fine


# ---------------------------------------------------------------------------
# public integrals

def integral_count(x: float, cfg: QuadratureConfig | None = None) -> float:
    """(1/pi) int G(sigma) x^sigma / (sigma |sigma-1|^{1/2}) d sigma.

    Defaults to epsilon = 0 (full integral from 1/2): the counting integrand
    has only an integrable (2 sigma - 1)^{-1/4} singularity there, and the
    full integral is what matches the exact counts.
    """
    cfg = cfg or QuadratureConfig(epsilon=0.0)
    if x < 1e3:
        raise ArgumentError("x >= 1000 required")
    lx = log(x)
    val = _integrate(lambda s: G_fn(s) * np.exp(s * lx) / s,
                     cfg.epsilon, cfg.nodes, cfg.rel_target)
    return val / pi


def integral_S(q: int, v: int, H: float, cfg: QuadratureConfig | None = None) -> float:
    """Integral form of S(q, v; H); see module docstring for the two cases."""
    cfg = cfg or QuadratureConfig()
    if H < 5:
        raise ArgumentError("H >= 5 required")
    bundle = constants.build_bundle(q)
    K = bundle.K
    lH = log(H)
    v %= q
    if v != 0:
        integral = _integrate(lambda s: F_chi0(s, q) * np.exp((s - 1) * lH),
                              cfg.epsilon, cfg.nodes, cfg.rel_target)
        return (H / q + bundle.residue_const[v]
                + integral / (2 * pi * K * K * (q - 1)))

    if cfg.epsilon < 0.01:
        raise ArgumentError("epsilon >= 0.01 required where F' enters the integrand")

    def fn(s):
        return (F_gamma_prime(s, cfg.derivative_steps)
                + F_gamma(s) * (lH - A_q(s, q) / 2)) * np.exp((s - 1) * lH)

    integral = _integrate(fn, cfg.epsilon, cfg.nodes, cfg.rel_target)
    return H / q + integral / (pi * K * K)


def integral_ktuple_average(k: int, H: float,
                            cfg: QuadratureConfig | None = None) -> float:
    """H^k + k(k-1) H^{k-1}/(pi K^2) * the F'/F log H integral (1/s variant)."""
    cfg = cfg or QuadratureConfig()
    if not 2 <= k <= 6:
        raise ArgumentError("2 <= k <= 6 required")
    if H < 5:
        raise ArgumentError("H >= 5 required")
    if cfg.epsilon < 0.01:
        raise ArgumentError("epsilon >= 0.01 required where F' enters the integrand")
    K = constants.landau_ramanujan()
    lH = log(H)

    def fn(s):
        return (F_inv_prime(s, cfg.derivative_steps)
                + F_inv(s) * lH) * np.exp((s - 1) * lH)

    integral = _integrate(fn, cfg.epsilon, cfg.nodes, cfg.rel_target)
    return H**k + k * (k - 1) * H ** (k - 1) / (pi * K * K) * integral


def epsilon_sensitivity(q: int, H: float, eps_grid=(0.01, 0.02, 0.05)) -> dict:
    """integral_S(q, 0; H) across eps values; the spread is part of the contract."""
    return {e: integral_S(q, 0, H, QuadratureConfig(epsilon=e)) for e in eps_grid}
