"""Exact square linear systems over the Gaussian rationals."""
from __future__ import annotations

from typing import Sequence

from .scalars import ONE, ZERO, GaussianRational, gq


class SingularMatrixError(ArithmeticError):
    """Raised when elimination finds no usable pivot."""

    def __init__(self, pivot_index: int):
        super().__init__(f"matrix is singular (no pivot in column {pivot_index})")
        self.pivot_index = pivot_index


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> list[GaussianRational]:
    """Solve ``matrix @ x = rhs`` exactly with Bareiss fraction-free elimination.

    Row pivoting picks the first nonzero entry in each column.  The residual of
    the returned solution is exactly zero.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("solve_exact needs a square matrix")
    if len(rhs) != n:
        raise ValueError("right-hand side has the wrong length")
    a = [[gq(v) for v in row] + [gq(b)] for row, b in zip(matrix, rhs)]
    prev = ONE
    for k in range(n):
        p = next((i for i in range(k, n) if not a[i][k].is_zero()), None)
        if p is None:
            raise SingularMatrixError(k)
        if p != k:
            a[k], a[p] = a[p], a[k]
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n + 1):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) / prev
            row_i[k] = ZERO
        prev = akk
    x = [ZERO] * n
    for i in range(n - 1, -1, -1):
        s = a[i][n]
        for j in range(i + 1, n):
            s = s - a[i][j] * x[j]
        x[i] = s / a[i][i]
    return x


def mat_vec(matrix: Sequence[Sequence], v: Sequence) -> list[GaussianRational]:
    out = []
    for row in matrix:
        s = ZERO
        for a, b in zip(row, v):
            s = s + gq(a) * gq(b)
        out.append(s)
    return out
