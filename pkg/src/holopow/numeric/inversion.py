"""Derivatives of the density of a sum of cubed normals at a point ``x0 != 0``.

For ``phi_n = phi**n`` the inversion integral is split at ``T``::

    f^(k)(x0) = Re[ int_0^T (it)^k phi_n e^{i x0 t} dt
                    + e^{i T x0} sum_{j=1}^m phi_n^(j-1)(T) sum_l C(k,l) (j+l-1)!/(j-1)! i^(k+j+l) T^(k-l) / x0^(j+l)
                    + sum_l C(k,l) (m+l-1)!/(m-1)! i^(m+k+l) / x0^(m+l) int_T^inf t^(k-l) phi_n^(m) e^{i x0 t} dt ] / pi

(repeated integration by parts on the tail).  The last integral is reduced to
``J_l = int_{T'}^inf e^{it} t^(-l/3) dt`` with ``T' = T x0`` after expanding
``phi_n`` in powers of ``t^(-1/3)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ..algebra import binomial
from ..errors import ValidityError
from .phi import SQRT_2PI, _gauss, integrate_segments, phi_series_terms, phi_values

# ---------------------------------------------------------------------------
# J_l
# ---------------------------------------------------------------------------


def sine_integral_full(p: float) -> float:
    """``int_0^inf sin(x) x^-p dx = pi / (2 Gamma(p) sin(p pi/2))`` for ``0 < p < 1``."""
    return math.pi / (2 * math.gamma(p) * math.sin(p * math.pi / 2))


def cosine_integral_full(p: float) -> float:
    """``int_0^inf cos(x) x^-p dx = pi / (2 Gamma(p) cos(p pi/2))`` for ``0 < p < 1``."""
    return math.pi / (2 * math.gamma(p) * math.cos(p * math.pi / 2))


def _head_integral(l: int, Tp: float, abs_tol: float = 1e-14) -> complex:
    """``int_0^T' e^{it} t^(-l/3) dt`` via ``t = s^3`` (smooth integrand
    ``3 s^(2-l) e^{i s^3}``), for ``l = 1, 2``."""
    S = Tp ** (1 / 3)
    npts = max(4, int(math.ceil(Tp / math.pi)) + 1)
    # breakpoints where the phase s^3 advances by pi/2
    edges = np.unique(np.concatenate([
        np.linspace(0.0, S, 5),
        np.cbrt(np.linspace(0.0, Tp, 2 * npts + 1)),
    ]))
    re, _ = integrate_segments(lambda s: 3 * s ** (2 - l) * np.cos(s ** 3), edges, abs_tol)
    im, _ = integrate_segments(lambda s: 3 * s ** (2 - l) * np.sin(s ** 3), edges, abs_tol)
    return complex(re, im)


def sici(x: float) -> tuple[float, float]:
    """``(Si(x), Ci(x))`` for ``x > 0``: Maclaurin series for ``x <= 4``,
    continued fraction for ``E1(ix)`` beyond."""
    if x <= 0:
        raise ValueError("sici needs x > 0")
    if x <= 4.0:
        si = 0.0
        ci_sum = 0.0
        term = x  # x^(2k+1)/(2k+1)! with sign
        k = 0
        while True:
            si_term = term / (2 * k + 1)
            si += si_term
            if abs(si_term) < 1e-18 * max(abs(si), 1e-300):
                break
            term *= -x * x / ((2 * k + 2) * (2 * k + 3))
            k += 1
        term = -x * x / 2  # (-1)^k x^(2k)/(2k)!, k >= 1
        k = 1
        while True:
            c_term = term / (2 * k)
            ci_sum += c_term
            if abs(c_term) < 1e-18 * max(abs(ci_sum), 1e-300):
                break
            term *= -x * x / ((2 * k + 1) * (2 * k + 2))
            k += 1
        ci = 0.5772156649015329 + math.log(x) + ci_sum
        return si, ci
    # modified Lentz for E1(ix) = -Ci(x) + i (Si(x) - pi/2)
    tiny = 1e-300
    b = complex(1.0, x)
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(2, 10000):
        a = -float((i - 1) ** 2)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    h *= complex(math.cos(x), -math.sin(x))
    return math.pi / 2 + h.imag, -h.real


def J_values(Tprime: float, l_max: int) -> np.ndarray:
    """``[J_1, ..., J_lmax]`` with ``J_l = int_{T'}^inf e^{it} t^(-l/3) dt``.

    ``J_1, J_2``: full-line value minus the integral over ``[0, T']``.
    ``J_3 = -Ci(T') + i (pi/2 - Si(T'))``.
    Higher ``l`` by ``J_{l+3} = (3/l) (e^{iT'} T'^(-l/3) + i J_l)``.
    """
    if Tprime <= 0:
        raise ValueError("T' must be positive")
    out = np.zeros(max(l_max, 3), dtype=complex)
    for l in (1, 2):
        p = l / 3
        full = complex(cosine_integral_full(p), sine_integral_full(p))
        out[l - 1] = full - _head_integral(l, Tprime)
    si, ci = sici(Tprime)
    out[2] = complex(-ci, math.pi / 2 - si)
    e = complex(math.cos(Tprime), math.sin(Tprime))
    for l in range(1, l_max - 2):
        out[l + 2] = 3.0 / l * (e * Tprime ** (-l / 3) + 1j * out[l - 1])
    return out[:l_max]


# ---------------------------------------------------------------------------
# expansion of phi**n
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def phi_power_coefficients(n: int, J: int = 48) -> tuple:
    """``Gamma_j`` with ``phi(t)^n = t^(-n/3) sum_j Gamma_j t^(-2j/3)``, ``j < J``."""
    K = J // 3 + 2
    gamma = np.zeros(J)
    for c, p in phi_series_terms(K):
        j = int(round((float(p) - 1 / 3) * 1.5))
        if j < J:
            gamma[j] += c
    out = np.zeros(J)
    out[0] = 1.0
    for _ in range(n):
        out = np.convolve(out, gamma)[:J]
    return tuple(out)


def phi_power_derivative(n: int, t: float, order: int, J: int = 48) -> float:
    """``d^order/dt^order phi(t)^n`` for large ``t`` by termwise differentiation."""
    total = 0.0
    for j, g in enumerate(phi_power_coefficients(n, J)):
        if g == 0.0:
            continue
        p = (n + 2 * j) / 3
        coef = 1.0
        for s in range(order):
            coef *= -(p + s)
        total += g * coef * t ** (-p - order)
    return total


# ---------------------------------------------------------------------------
# initial values
# ---------------------------------------------------------------------------

@dataclass
class InitialValueJob:
    """Parameters of the derivative computation; ``k_max < m + n/3`` is required."""

    n: int
    x0: float
    m: int = 6
    T: float = 10.0
    k_max: int | None = None
    J: int = 48
    panels: int | None = None
    phi_method: str = "airy"
    auto_raise_m: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.k_max is None:
            self.k_max = 3 * self.n - 1
        if self.auto_raise_m:
            self.m = max(self.m, 3 * self.n)
        if self.x0 == 0:
            raise ValidityError("x0 = 0 is a singular point of the density equation")
        if not (self.k_max < self.m + self.n / 3):
            raise ValidityError(
                f"k_max={self.k_max} violates k_max < m + n/3 with m={self.m}, n={self.n}")
        if self.T <= 0:
            raise ValueError("T must be positive")


@lru_cache(maxsize=16)
def _head_nodes(T: float, panels: int, order: int, method: str):
    x, w = _gauss(order)
    edges = np.linspace(0.0, T, panels + 1)
    a, b = edges[:-1, None], edges[1:, None]
    half = (b - a) / 2
    nodes = ((a + b) / 2 + half * x[None, :]).ravel()
    weights = (half * w[None, :]).ravel()
    return nodes, weights, phi_values(nodes, method=method)


def initial_values(job: InitialValueJob) -> np.ndarray:
    """``[f_n(x0), f_n'(x0), ..., f_n^(k_max)(x0)]``."""
    n, m, T, kmax = job.n, job.m, job.T, job.k_max
    sign_x = 1.0 if job.x0 > 0 else -1.0
    x0 = abs(job.x0)
    Tp = T * x0

    # [0, T]: composite Gauss-Legendre; panel count resolves e^{i x0 t}
    panels = job.panels or max(40, int(math.ceil(T * (x0 + 1) * 2)))
    nodes, weights, phis = _head_nodes(float(T), panels, 24, job.phi_method)
    phin = phis ** n
    osc = np.exp(1j * x0 * nodes)

    # boundary derivatives phi_n^(j-1)(T), j = 1..m, and the tail via J_l
    bders = [phi_power_derivative(n, T, j - 1, job.J) for j in range(1, m + 1)]
    coeffs = phi_power_coefficients(n, job.J)
    l3_max = n + 2 * (job.J - 1) + 3 * (m + kmax) + 3
    Js = J_values(Tp, l3_max)
    eT = complex(math.cos(Tp), math.sin(Tp))

    def tail(k: int, l: int) -> complex:
        # int_T^inf t^(k-l) phi_n^(m)(t) e^{i x0 t} dt
        total = 0j
        for j, g in enumerate(coeffs):
            if g == 0.0:
                continue
            p = (n + 2 * j) / 3
            coef = 1.0
            for s in range(m):
                coef *= -(p + s)
            three_q = n + 2 * j + 3 * (m - k + l)
            q = three_q / 3
            total += g * coef * x0 ** (q - 1) * Js[three_q - 1]
        return total

    out = []
    for k in range(kmax + 1):
        head = np.sum(weights * (1j * nodes) ** k * phin * osc)
        bsum = 0j
        for j in range(1, m + 1):
            inner = 0j
            for l in range(k + 1):
                inner += (binomial(k, l) * math.perm(j + l - 1, l) * 1j ** (k + j + l)
                          * T ** (k - l) / x0 ** (j + l))
            bsum += bders[j - 1] * inner
        bsum *= eT
        tsum = 0j
        for l in range(k + 1):
            tsum += (binomial(k, l) * math.perm(m + l - 1, l) * 1j ** (m + k + l)
                     / x0 ** (m + l)) * tail(k, l)
        val = (head + bsum + tsum).real / math.pi
        out.append(val * sign_x ** k)
    return np.array(out)
