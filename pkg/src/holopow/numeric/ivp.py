"""Initial-value problems for linear ODEs with polynomial coefficients.

The order-``r`` equation ``sum_k p_k(x) y^(k) = 0`` is written as a first-order
companion system and integrated with the Dormand-Prince 5(4) pair.  Steps are
clipped so that every target point is hit exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..errors import SingularityError, ToleranceError

# Dormand-Prince 5(4) tableau
_C = np.array([0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1, 1])
_A = [
    [],
    [1 / 5],
    [3 / 40, 9 / 40],
    [44 / 45, -56 / 15, 32 / 9],
    [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729],
    [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656],
    [35 / 384, 0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84],
]
_B5 = np.array([35 / 384, 0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0])
_B4 = np.array([5179 / 57600, 0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40])
_E = _B5 - _B4


@dataclass
class IVPStats:
    steps: int = 0
    rejected: int = 0
    max_error_estimate: float = 0.0


@dataclass
class IVPSolution:
    """``values[i, k]`` is the ``k``-th derivative at ``grid[i]``.

    ``stats.max_error_estimate`` is the largest accepted local error estimate
    in units of the tolerance (at most 1)."""

    grid: np.ndarray
    values: np.ndarray
    stats: IVPStats = field(default_factory=IVPStats)

    @property
    def f(self) -> np.ndarray:
        return self.values[:, 0]


def coefficient_arrays(op) -> list[np.ndarray]:
    """Complex ascending coefficient arrays ``p_0, ..., p_r`` of an operator."""
    polys = op.coefficient_polys() if hasattr(op, "coefficient_polys") else op.cleared()
    return [np.array([complex(c) for c in p.coeffs] or [0j]) for p in polys]


def leading_zeros(op) -> np.ndarray:
    coeffs = coefficient_arrays(op)
    lead = coeffs[-1]
    if len(lead) <= 1:
        return np.array([], dtype=complex)
    return np.roots(lead[::-1])


def _polyval(c: np.ndarray, x):
    return np.polynomial.polynomial.polyval(x, c)


def ivp_solve(op, x0: float, initial, targets: Sequence[float], rtol: float = 1e-10,
              atol: float | None = None, exclusion: float = 1e-3, max_steps: int = 200000,
              h0: float | None = None) -> IVPSolution:
    """Integrate ``op y = 0`` from ``x0`` with ``y^(k)(x0) = initial[k]``.

    ``op`` is a :class:`~holopow.weyl.WeylElement`, a
    :class:`~holopow.weyl.DiffOperator` with polynomial coefficients or a
    :class:`~holopow.stats.DensityODE`.  The real segment from ``x0`` to each
    target must stay ``exclusion`` away from the zeros of the leading
    coefficient, otherwise :class:`SingularityError` is raised.
    """
    if hasattr(op, "operator") and not hasattr(op, "coefficient_polys"):
        op = op.operator
    coeffs = coefficient_arrays(op)
    r = len(coeffs) - 1
    y0 = np.asarray(initial, dtype=complex)
    if r < 1 or len(y0) != r:
        raise ValueError(f"need {r} initial values for an order-{r} operator, got {len(y0)}")
    targets = np.asarray(targets, dtype=float)
    atol = rtol if atol is None else atol
    zeros = leading_zeros(op)
    lo, hi = min(x0, targets.min()), max(x0, targets.max())
    for z in zeros:
        dist = abs(z.imag) if lo <= z.real <= hi else min(abs(z - lo), abs(z - hi))
        if dist < exclusion:
            raise SingularityError(
                f"leading coefficient vanishes at {z:.6g}, within {exclusion} of the path [{lo}, {hi}]")

    lead = coeffs[-1]
    lower = coeffs[:-1]

    def rhs(x, y):
        acc = 0j
        for k in range(r):
            acc += _polyval(lower[k], x) * y[k]
        out = np.empty_like(y)
        out[:-1] = y[1:]
        out[-1] = -acc / _polyval(lead, x)
        return out

    stats = IVPStats()
    results = {}
    for direction in (1.0, -1.0):
        side = np.sort(targets[(targets - x0) * direction > 0])
        if direction < 0:
            side = side[::-1]
        x, y = float(x0), y0.copy()
        h = h0 or 1e-3 * max(1.0, abs(x0))
        f = rhs(x, y)
        for tgt in side:
            while (tgt - x) * direction > 1e-15 * max(1.0, abs(tgt)):
                if stats.steps + stats.rejected > max_steps:
                    raise ToleranceError("step budget exhausted", float("nan"))
                step = min(h, abs(tgt - x))
                last = step == abs(tgt - x)
                K = [f]
                for s in range(1, 7):
                    ys = y + direction * step * sum(a * K[j] for j, a in enumerate(_A[s]))
                    K.append(rhs(x + direction * step * _C[s], ys))
                y5 = y + direction * step * sum(b * K[j] for j, b in enumerate(_B5) if b)
                errv = direction * step * sum(e * K[j] for j, e in enumerate(_E) if e)
                scale = atol + rtol * np.maximum(np.abs(y), np.abs(y5))
                err = float(np.sqrt(np.mean(np.abs(errv / scale) ** 2)))
                if err <= 1.0:
                    x = tgt if last else x + direction * step
                    y = y5
                    f = K[6] if not last else rhs(x, y)
                    stats.steps += 1
                    stats.max_error_estimate = max(stats.max_error_estimate, err)
                    fac = 5.0 if err == 0 else min(5.0, 0.9 * err ** -0.2)
                    if not last:
                        h = step * fac
                else:
                    stats.rejected += 1
                    h = step * max(0.1, 0.9 * err ** -0.2)
                if h < 1e-14 * max(1.0, abs(x)):
                    raise ToleranceError("step size underflow", err)
            results[float(tgt)] = y.copy()
    vals = np.array([results[float(t)] if float(t) != float(x0) else y0 for t in targets])
    return IVPSolution(grid=targets, values=vals, stats=stats)
