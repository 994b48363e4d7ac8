"""Monte Carlo oracle: kernel density estimate of ``sum_i X_i^3``."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass
class MonteCarloEstimate:
    xs: np.ndarray
    density: np.ndarray
    stderr: np.ndarray
    bandwidth: float
    samples: int


def silverman_bandwidth(y: np.ndarray) -> float:
    sd = float(np.std(y, ddof=1))
    q75, q25 = np.percentile(y, [75, 25])
    spread = min(sd, (q75 - q25) / 1.34)
    return 0.9 * spread * len(y) ** (-0.2)


def monte_carlo_density(n: int, xs, samples: int = 10 ** 6, seed: int = 0,
                        bandwidth: float | None = None, chunk: int = 2 ** 22) -> MonteCarloEstimate:
    """Gaussian-kernel density estimate with Silverman bandwidth.

    The standard error at each ``x`` is ``sqrt(var(K_h(x - Y)) / N)``.
    Deterministic for a fixed ``seed``.
    """
    if samples < 10 ** 4:
        raise ValueError("samples must be at least 10^4")
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    rng = np.random.default_rng(seed)
    y = np.zeros(samples)
    for _ in range(n):
        y += rng.standard_normal(samples) ** 3
    h = bandwidth if bandwidth is not None else silverman_bandwidth(y)
    # keep each (grid x block) kernel matrix near 2^22 entries
    chunk = max(1024, min(chunk, 2 ** 22 // max(1, len(xs))))
    norm = 1.0 / (h * math.sqrt(2 * math.pi))
    s1 = np.zeros(len(xs))
    s2 = np.zeros(len(xs))
    for start in range(0, samples, chunk):
        block = y[start:start + chunk]
        u = (xs[:, None] - block[None, :]) / h
        k = norm * np.exp(-0.5 * u * u)
        s1 += k.sum(axis=1)
        s2 += (k * k).sum(axis=1)
    mean = s1 / samples
    var = np.maximum(s2 / samples - mean ** 2, 0.0)
    return MonteCarloEstimate(xs=xs, density=mean, stderr=np.sqrt(var / samples),
                              bandwidth=h, samples=samples)
