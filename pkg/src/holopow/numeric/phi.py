"""Characteristic function of ``X**3`` for standard normal ``X``.

``phi(t) = sqrt(2/pi) * int_0^inf exp(-x^2/2) cos(t x^3) dx``

Three independent evaluation routes: oscillatory quadrature, the expansion in
powers of ``1/t`` with multifactorial coefficients, and the Airy relation
``phi(t) = sqrt(2 pi) 3^(-1/3) t^(-1/3) exp(t^-2/108) Ai(t^(-4/3) / (4 3^(4/3)))``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..errors import ToleranceError

SQRT_2PI = math.sqrt(2 * math.pi)
AI0 = 3 ** (-2 / 3) / math.gamma(2 / 3)
AIP0 = -(3 ** (-1 / 3)) / math.gamma(1 / 3)
OSCILLATION_LIMIT = 100.0
AIRY_ARG_LIMIT = 1.0


def multifactorial(n: int, m: int) -> int:
    """``n (n-m) (n-2m) ...`` over positive factors; 1 for ``n <= 0``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    out = 1
    while n > 0:
        out *= n
        n -= m
    return out


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------

@lru_cache(maxsize=8)
def _gauss(order: int):
    return np.polynomial.legendre.leggauss(order)


def _gl(f, edges: np.ndarray, order: int) -> float:
    x, w = _gauss(order)
    a, b = edges[:-1, None], edges[1:, None]
    half = (b - a) / 2
    nodes = (a + b) / 2 + half * x[None, :]
    return float(np.sum(f(nodes) * w[None, :] * half))


def integrate_segments(f, edges, abs_tol: float, orders=(20, 30), max_splits: int = 4):
    """Composite Gauss-Legendre on the given breakpoints.

    The error estimate is the difference between two rule orders; segments are
    halved up to ``max_splits`` times.  Returns ``(value, error_estimate)`` and
    raises :class:`ToleranceError` if ``abs_tol`` is not met.
    """
    edges = np.asarray(edges, dtype=float)
    for _ in range(max_splits + 1):
        lo = _gl(f, edges, orders[0])
        hi = _gl(f, edges, orders[1])
        err = abs(hi - lo)
        if err <= abs_tol:
            return hi, err
        mids = (edges[:-1] + edges[1:]) / 2
        edges = np.sort(np.concatenate([edges, mids]))
    raise ToleranceError("quadrature did not reach the requested tolerance", err)


def _cutoff(power: int) -> float:
    """``X`` with ``X^power exp(-X^2/2)`` below ~1e-18."""
    X = 9.0
    for _ in range(20):
        X = math.sqrt(2 * (41.5 + power * math.log(X)))
    return X


def phi_quadrature(t: float, deriv: int = 0, abs_tol: float = 1e-12,
                   max_t: float = OSCILLATION_LIMIT) -> float:
    """``phi^(k)(t) = sqrt(2/pi) int_0^inf x^(3k) exp(-x^2/2) cos(t x^3 + k pi/2) dx``.

    Breakpoints are the zeros of the cosine plus a uniform grid; see
    :func:`integrate_segments` for the error control.
    """
    t = float(t)
    if abs(t) > max_t:
        raise ValueError(f"|t| = {abs(t)} exceeds the oscillation limit {max_t}")
    sign = 1.0
    if t < 0:
        t = -t
        sign = (-1.0) ** deriv
    k = deriv
    X = _cutoff(3 * k)
    edges = [np.linspace(0.0, X, int(math.ceil(X / 0.5)) + 1)]
    if t > 0:
        shift = k * math.pi / 2
        m_hi = int((t * X ** 3 + shift) / math.pi)
        m = np.arange(0, m_hi + 1)
        phase = (m + 0.5) * math.pi - shift
        phase = phase[phase > 0]
        zeros = np.cbrt(phase / t)
        edges.append(zeros[zeros < X])
    edges = np.unique(np.concatenate(edges))
    c = math.sqrt(2 / math.pi)

    def f(x):
        return x ** (3 * k) * np.exp(-x * x / 2) * np.cos(t * x ** 3 + k * math.pi / 2)

    val, _ = integrate_segments(f, edges, abs_tol / c)
    return sign * c * val


# ---------------------------------------------------------------------------
# expansion in 1/t
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _series_coefficients(K: int) -> tuple:
    """Exact coefficients ``(A_k, B_k)``, ``k < K``:
    ``A_k = (6k-5)!6 / ((6k)!6 (6k-4)!6)``, ``B_k = (6k-1)!6 / ((6k)!6 (6k+4)!6)``."""
    out = []
    for k in range(K):
        A = Fraction(multifactorial(6 * k - 5, 6), multifactorial(6 * k, 6) * multifactorial(6 * k - 4, 6))
        B = Fraction(multifactorial(6 * k - 1, 6), multifactorial(6 * k, 6) * multifactorial(6 * k + 4, 6))
        out.append((A, B))
    return tuple(out)


def phi_series_terms(K: int) -> list[tuple[float, Fraction]]:
    """``(c, p)`` pairs with ``phi(t) = sum c t^(-p)`` for ``t > 0``, ``2K`` terms,
    ordered by increasing ``p``."""
    c1 = SQRT_2PI / (3 * math.gamma(2 / 3))
    c2 = SQRT_2PI / (9 * math.gamma(1 / 3))
    terms = []
    for k, (A, B) in enumerate(_series_coefficients(K)):
        scale = Fraction(1, 9 ** k)
        terms.append((c1 * float(A * scale), Fraction(1, 3) + 2 * k))
        terms.append((-c2 * float(B * scale), Fraction(5, 3) + 2 * k))
    terms.sort(key=lambda cp: cp[1])
    return terms


def _rising(p: float, j: int) -> float:
    out = 1.0
    for s in range(j):
        out *= p + s
    return out


def phi_asymptotic(t: float, K: int | None = None, deriv: int = 0,
                   abs_tol: float = 1e-17, return_last: bool = False):
    """Expansion of ``phi^(deriv)`` in powers of ``1/t`` (``t != 0``).

    With ``K`` given, ``K`` terms of each of the two series are summed.
    Otherwise terms are added until one falls below ``abs_tol`` or starts
    growing (smallest-term truncation).  Negative ``t`` uses ``phi(-t) = phi(t)``.
    """
    t = float(t)
    if t == 0:
        raise ValueError("the expansion is at infinity; t = 0 is not allowed")
    sign = 1.0
    if t < 0:
        t = -t
        sign = (-1.0) ** deriv
    limit = K if K is not None else 40
    terms = phi_series_terms(limit)
    total = 0.0
    last = math.inf
    prev_mag = math.inf
    for c, p in terms:
        pf = float(p)
        term = c * (-1) ** deriv * _rising(pf, deriv) * t ** (-pf - deriv)
        if K is None and abs(term) > prev_mag:
            break
        total += term
        last = abs(term)
        prev_mag = abs(term)
        if K is None and last < abs_tol:
            break
    if return_last:
        return sign * total, last
    return sign * total


# ---------------------------------------------------------------------------
# Airy relation
# ---------------------------------------------------------------------------

def airy_series(z: float, tol: float = 1e-18) -> tuple[float, float]:
    """``(Ai(z), Ai'(z))`` by the Maclaurin series about 0."""
    z = float(z)
    if abs(z) > 5:
        raise ValueError(f"|z| = {abs(z)} too large for the Maclaurin Airy series")
    # f = sum 3^k (1/3)_k z^(3k)/(3k)!,  g = sum 3^k (2/3)_k z^(3k+1)/(3k+1)!
    f, g = 1.0, z
    fp, gp = 0.0, 1.0
    tf, tg = 1.0, z
    z3 = z ** 3
    for k in range(200):
        tf *= z3 / ((3 * k + 2) * (3 * k + 3))
        tg *= z3 / ((3 * k + 3) * (3 * k + 4))
        f += tf
        g += tg
        fp += tf * (3 * k + 3) / z if z else 0.0
        gp += tg * (3 * k + 4) / z if z else 0.0
        if abs(tf) + abs(tg) < tol * (abs(f) + abs(g)):
            break
    ai = AI0 * f + AIP0 * g
    aip = AI0 * fp + AIP0 * gp
    return ai, aip


def airy_ai(z: float) -> float:
    return airy_series(z)[0]


def airy_argument(t: float) -> float:
    return t ** (-4 / 3) / (4 * 3 ** (4 / 3))


def airy_phi(t: float, arg_limit: float = AIRY_ARG_LIMIT) -> float:
    """``phi(t)`` for ``t > 0`` through the Airy relation (Maclaurin ``Ai``)."""
    t = float(t)
    if t <= 0:
        raise ValueError("airy_phi needs t > 0")
    z = airy_argument(t)
    if z > arg_limit:
        raise ValueError(f"Airy argument {z:.3g} exceeds {arg_limit} (t too small for the series)")
    return SQRT_2PI * 3 ** (-1 / 3) * t ** (-1 / 3) * math.exp(t ** -2 / 108) * airy_ai(z)


AIRY_T_MIN = (4 * 3 ** (4 / 3) * AIRY_ARG_LIMIT) ** (-3 / 4)


@dataclass
class PhiEvaluator:
    """Evaluate ``phi`` and its derivatives: quadrature for ``|t| < T_switch``,
    the ``1/t`` expansion beyond (last retained term below ``abs_tol``)."""

    T_switch: float = 8.0
    K: int | None = None
    abs_tol: float = 1e-15

    def __call__(self, t: float, deriv: int = 0) -> float:
        if abs(t) < self.T_switch:
            return phi_quadrature(t, deriv=deriv)
        val, last = phi_asymptotic(t, K=self.K, deriv=deriv, abs_tol=self.abs_tol, return_last=True)
        if self.K is None and last >= self.abs_tol:
            raise ToleranceError("expansion terms stopped decreasing before abs_tol", last)
        return val

    def many(self, ts, deriv: int = 0) -> np.ndarray:
        return np.array([self(float(t), deriv) for t in np.ravel(ts)])


def phi_values(ts, method: str = "airy") -> np.ndarray:
    """Vector of ``phi(t)``.

    ``method="airy"`` uses the Airy relation where its series applies and
    quadrature at small ``|t|``; ``"quadrature"`` and ``"evaluator"``
    (:class:`PhiEvaluator`) are the alternatives.
    """
    ts = np.asarray(ts, dtype=float)
    out = np.empty_like(ts)
    if method == "evaluator":
        ev = PhiEvaluator()
        for idx, t in np.ndenumerate(ts):
            out[idx] = ev(float(t))
        return out
    for idx, t in np.ndenumerate(ts):
        at = abs(float(t))
        if method == "airy" and at >= AIRY_T_MIN:
            out[idx] = airy_phi(at)
        elif method in ("airy", "quadrature"):
            out[idx] = phi_quadrature(at)
        else:
            raise ValueError(f"unknown method {method!r}")
    return out


def phi_residual(t: float, derivs) -> float:
    """Residual of ``27 t^3 phi'' + (81 t^2 + 1) phi' + 15 t phi``."""
    f0, f1, f2 = derivs
    return 27 * t ** 3 * f2 + (81 * t * t + 1) * f1 + 15 * t * f0
