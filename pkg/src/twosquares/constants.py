"""Numerical constants: K, omega, Z'(0), expansion coefficients, C_{q,chi}, C_{a,b}.

Closed forms where available; otherwise a numeric Taylor oracle.  The oracle
expands P(s) = s^{3/2} D(s) Gamma(s) around s = 0, where
    D(s) = zeta(s) zeta(s+1)^{1/2} M(s),
    M(s) = (1 - 2^-s + 2^-2s) [L(s+1,chi4) (1 - 2^-(s+1)) ep3(2s+2)]^{-1/2},
and P is analytic at 0 (s*zeta(s+1) -> 1).  Writing P(s) = sum_j p_j s^j the
descending-log coefficients are c(j) = p_j / (2 K^2 Gamma(3/2 - j)); for the
residue-restricted version multiply by the analytic factor (1 - q^-s)/s before
reading off coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gamma as gamma_fn, lgamma, log, pi, sqrt

import numpy as np

from . import characters as chars
from . import eulerprod as ep
from .errors import AccuracyError, ArgumentError

EULER_GAMMA = 0.57721566490153286061  # hard-coded universal constant


def landau_ramanujan(depth_J: int = 6, tail_prime_bound: int = 1000) -> float:
    """K = 2^{-1/2} prod_{p=3(4)} (1-p^-2)^{-1/2}, accelerated and depth-certified."""
    if depth_J < 3:
        raise ArgumentError("depth_J >= 3 required")
    if tail_prime_bound < 1000:
        raise ArgumentError("tail_prime_bound >= 1000 required")
    k1 = (2 * ep.ep3(2.0, depth_J, tail_prime_bound)) ** -0.5
    k2 = (2 * ep.ep3(2.0, depth_J + 1, tail_prime_bound)) ** -0.5
    if abs(k1 - k2) > 1e-10:
        raise AccuracyError(f"depth {depth_J} vs {depth_J+1} disagree: {k1} vs {k2}", partial=k2)
    return k2


@lru_cache(maxsize=1)
def _K() -> float:
    return landau_ramanujan()


def alpha1() -> float:
    """L'(1,chi4)/L(1,chi4) via the Gamma(1/4) closed form."""
    return EULER_GAMMA + 2 * log(2.0) + 3 * log(pi) - 4 * lgamma(0.25)


@lru_cache(maxsize=1)
def omega_constant() -> float:
    """omega = log(2/pi^2) + L'(1,chi4)/L(1,chi4) + 2 sum_{p=3(4)} log p/(p^2-1)."""
    return log(2 / pi**2) + alpha1() + ep.beta1()


def z_prime_0() -> float:
    return _K() / sqrt(pi) * omega_constant()


def selberg_delange_coeffs(q: int):
    """(c(1), c0(1), c1(1)) closed forms for prime q = 1 mod 4."""
    _check_q(q)
    K, om = _K(), omega_constant()
    c1 = (om + EULER_GAMMA) / (2 * pi * K)
    c1_1 = -log(q) / (K * (q - 1) * pi)
    c0_1 = ((om + EULER_GAMMA) / 2 + log(q)) / (K * pi)
    return c1, c0_1, c1_1


def _check_q(q: int) -> None:
    if q < 2 or any(q % d == 0 for d in range(2, int(q**0.5) + 1)) or q % 4 != 1:
        raise ArgumentError(f"q={q} must be a prime = 1 mod 4")


def _sqrt_pos(z: complex, what: str) -> complex:
    """Principal square root, asserting the radicand is not on the cut side."""
    if isinstance(z, complex) and z.real <= 0 and abs(z.imag) < 1e-14:
        raise AccuracyError(f"{what}: radicand {z} has non-positive real part")
    if not isinstance(z, complex) and z <= 0:
        raise AccuracyError(f"{what}: radicand {z} <= 0")
    return complex(z) ** 0.5


def C_q_chi(q: int, chi: chars.Character) -> complex:
    """C_{q,chi} = L(0,chi) L(1,chi)^{1/2} M_chi(0) for non-principal chi mod q.

    M_chi(0) = (1 - chi(2) + chi(4)) (1 - chi(2)/2)^{-1/2} L(1, chi*chi4)^{-1/2}
               * prod_{p=3(4)} (1 - chi(p)^2 p^-2)^{-1/2}.
    Nonzero only for odd chi (even chi have L(0,chi) = 0).
    """
    if chi.is_principal:
        raise ArgumentError("chi must be non-principal")
    L0, L1 = chars.L_special(chi)
    if abs(L0) < 1e-14:  # even character
        return 0j
    cross = chars.L_special(chi * chars.CHI4)[1]
    c2 = chi(2)
    val = (
        L0
        * _sqrt_pos(L1, "L(1,chi)")
        * (1 - c2 + chi(4))
        / _sqrt_pos(1 - c2 / 2, "(1-chi(2)/2)")
        / _sqrt_pos(cross, "L(1,chi*chi4)")
        * ep.ep3_char_inv_sqrt(chi.power(2), 2.0)
    )
    return val


@lru_cache(maxsize=None)
def _C_q_chi_all(q: int):
    t = chars.character_table(q)
    return [(chi, C_q_chi(q, chi)) for chi in t.non_principal()]


def C_ab(q: int, a: int, b: int, K: float | None = None) -> float:
    """C_{a,b} = (q / (2 K phi(q))) sum_{chi != chi0} conj(chi)(b-a) C_{q,chi}."""
    _check_q(q)
    if (a - b) % q == 0:
        raise ArgumentError("a = b mod q: off-diagonal only")
    K = K if K is not None else _K()
    v = (b - a) % q
    s = sum(chi.conj()(v) * c for chi, c in _C_q_chi_all(q))
    s *= q / (2 * K * (q - 1))
    if abs(s.imag) > 1e-10:
        raise AccuracyError(f"C_ab imaginary part {s.imag} too large")
    return s.real


def residue_constant(q: int, v: int) -> float:
    """Constant term of S(q, v; H) for v != 0: (1/(2K^2 phi(q))) sum conj(chi)(v) C_{q,chi}."""
    _check_q(q)
    K = _K()
    s = sum(chi.conj()(v % q) * c for chi, c in _C_q_chi_all(q))
    s /= 2 * K * K * (q - 1)
    if abs(s.imag) > 1e-10:
        raise AccuracyError(f"residue constant imaginary part {s.imag} too large")
    return s.real


def pair_conjecture_C1(q: int) -> float:
    """C1 = (sqrt2 phi(q)/pi)(log K + (omega+gamma)/2) + sqrt2 q log q / pi."""
    _check_q(q)
    K, om = _K(), omega_constant()
    return (sqrt(2) * (q - 1) / pi) * (log(K) + (om + EULER_GAMMA) / 2) + sqrt(2) * q * log(q) / pi


# ---------------------------------------------------------------------------
# numeric Taylor oracle for the j >= 2 coefficients

def _M_of_s(s: float) -> float:
    """M(s) = (1-2^-s+2^-2s) [L(s+1,chi4)(1-2^-(s+1)) ep3(2s+2)]^{-1/2}."""
    A = 1 - 2.0 ** (-s) + 2.0 ** (-2 * s)
    rad = ep.dirichlet_chi4(s + 1) * (1 - 2.0 ** (-(s + 1))) * ep.ep3(2 * (s + 1))
    if np.any(np.asarray(rad) <= 0):
        raise AccuracyError(f"M(s) radicand <= 0 at s={s}")
    return A / np.sqrt(rad)


def _P_of_s(s: float) -> float:
    """s^{3/2} D(s) Gamma(s) = zeta(s) * (s zeta(s+1))^{1/2} * M(s) * Gamma(s+1)."""
    reg = chars.zeta_real(s + 1, regularized=True)  # = s*zeta(s+1), -> 1 at 0
    if reg <= 0:
        raise AccuracyError(f"s*zeta(s+1) <= 0 at s={s}")
    return chars.zeta_real(s) * sqrt(reg) * _M_of_s(s) * gamma_fn(s + 1)


def _fd_weights(order: int, npts: int) -> np.ndarray:
    """Central finite-difference weights for f^(order) on points -m..m (unit step)."""
    m = npts // 2
    pts = np.arange(-m, m + 1, dtype=float)
    V = np.vander(pts, increasing=True).T  # V[k, j] = pts[j]^k
    rhs = np.zeros(npts)
    rhs[order] = float(gamma_fn(order + 1))
    return np.linalg.solve(V, rhs)


def _derivative_richardson(f, order: int, h0: float, levels: int, tol: float):
    """f^(order)(0) by central differences + Richardson over halved steps."""
    npts = 2 * ((order + 1) // 2) + 3  # a couple of extra points for stability
    w = _fd_weights(order, npts)
    m = npts // 2
    ests = []
    for i in range(levels):
        h = h0 / 2**i
        vals = np.array([f(k * h) for k in range(-m, m + 1)])
        ests.append(float(w @ vals) / h**order)
    # Richardson table, error series in h^2
    R = [ests]
    for j in range(1, levels):
        prev = R[-1]
        R.append([(4**j * prev[i + 1] - prev[i]) / (4**j - 1) for i in range(len(prev) - 1)])
    best, second = R[-1][0], R[-2][-1] if len(R) >= 2 else R[-1][0]
    if abs(best - second) > tol * max(1.0, abs(best)):
        raise AccuracyError(f"Richardson extrapolation not converged for order {order}", partial=best)
    return best


@lru_cache(maxsize=None)
def higher_coeffs_numeric(j_max: int = 3, q: int = 5, h0: float = 0.06, levels: int = 4):
    """map j -> (c(j), c0(j), c1(j)) for 1 <= j <= j_max, via the Taylor oracle."""
    if j_max > 4:
        raise ArgumentError("j_max <= 4")
    _check_q(q)
    K = _K()
    # Taylor coefficients p_j of P(s) at 0
    pcoef = [
        _derivative_richardson(_P_of_s, d, h0, levels, 1e-6) / gamma_fn(d + 1)
        for d in range(j_max + 1)
    ]
    # multiply by (1 - q^-s)/s = sum_n (-1)^n log(q)^{n+1}/(n+1)! * s^n
    lq = log(q)
    gcoef = [(-1) ** n * lq ** (n + 1) / gamma_fn(n + 2) for n in range(j_max + 1)]
    qcoef = [sum(pcoef[i] * gcoef[n - i] for i in range(n + 1)) for n in range(j_max + 1)]
    out = {}
    for j in range(1, j_max + 1):
        g = gamma_fn(1.5 - j)
        c_j = pcoef[j] / (2 * K * K * g)
        c_j_chi0 = qcoef[j - 1] / (2 * K * K * g)
        out[j] = (c_j, c_j - c_j_chi0, c_j_chi0 / (q - 1))
    return out


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConstantsBundle:
    q: int
    K: float
    gamma: float
    omega: float
    z_prime_0: float
    c1_landau: float
    c_j: dict
    c0_j: dict
    c1_j: dict
    C_q_chi: dict      # character index (in table order, 1..phi-1) -> complex
    C_ab: dict         # residue difference v != 0 -> real
    residue_const: dict  # v != 0 -> constant term of S(q,v;H)
    pair_C1: float
    method_tags: dict = field(default_factory=dict)

    def as_json_dict(self) -> dict:
        return {
            "q": self.q,
            "K": self.K,
            "gamma": self.gamma,
            "omega": self.omega,
            "z_prime_0": self.z_prime_0,
            "c1_landau": self.c1_landau,
            "c_j": {str(j): v for j, v in self.c_j.items()},
            "c0_j": {str(j): v for j, v in self.c0_j.items()},
            "c1_j": {str(j): v for j, v in self.c1_j.items()},
            "C_q_chi": {str(k): [v.real, v.imag] for k, v in self.C_q_chi.items()},
            "C_ab": {str(v): c for v, c in self.C_ab.items()},
            "pair_C1": self.pair_C1,
            "method_tags": self.method_tags,
        }


C1_LANDAU_REFINED = 0.581948659  # second coefficient of the refined count


@lru_cache(maxsize=None)
def build_bundle(q: int = 5, j_max: int = 3) -> ConstantsBundle:
    _check_q(q)
    K = _K()
    om = omega_constant()
    c1, c0_1, c1_1 = selberg_delange_coeffs(q)
    hi = higher_coeffs_numeric(j_max, q)
    c_j = {1: c1}
    c0_j = {1: c0_1}
    c1_j = {1: c1_1}
    for j in range(2, j_max + 1):
        c_j[j], c0_j[j], c1_j[j] = hi[j]
    cqchi = {i + 1: c for i, (chi, c) in enumerate(_C_q_chi_all(q))}
    cab = {v: C_ab(q, 0, v, K) for v in range(1, q)}
    rconst = {v: residue_constant(q, v) for v in range(1, q)}
    tags = {
        "K": "accelerated zeta/L(chi4) doubling identity, depths certified",
        "gamma": "hard-coded 20 digits",
        "omega": "log(2/pi^2) + Gamma(1/4) closed form + prime-zeta accelerated sum",
        "c_j>=2": "numeric Taylor oracle (Richardson central differences)",
        "C_q_chi": "finite L-sums x prime-zeta accelerated Euler product",
        "c1_landau": "fixed literature value",
    }
    return ConstantsBundle(
        q=q, K=K, gamma=EULER_GAMMA, omega=om, z_prime_0=z_prime_0(),
        c1_landau=C1_LANDAU_REFINED, c_j=c_j, c0_j=c0_j, c1_j=c1_j,
        C_q_chi=cqchi, C_ab=cab, residue_const=rconst,
        pair_C1=pair_conjecture_C1(q), method_tags=tags,
    )
