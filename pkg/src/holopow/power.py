"""Linear ODE for the n-th power of a solution of a second-order ODE.

If ``f'' = a1 f' + a0 f`` then every derivative of ``f**n`` is a combination
of ``f**(n-i) * f'**i`` (``i = 0..n``) with rational-function weights.  The
weights of ``d^j/dx^j f**n`` form column ``j`` of the matrix ``Q``; a kernel
vector of ``Q`` gives an operator of order ``n + 1`` annihilating ``f**n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    POS_INF,
    RF_ONE,
    RF_ZERO,
    GaussianRational,
    Polynomial,
    RationalFunction,
    binomial,
    clear_denominators,
    format_rational_function,
    gq,
    laurent_bounds,
)
from .config import check_power
from .errors import HypothesisError, UndefinedParameterError
from .weyl import DiffOperator, canonicalize_polys


def _rf(v) -> RationalFunction:
    if isinstance(v, RationalFunction):
        return v
    out = RationalFunction._coerce(v)
    if out is None:
        raise TypeError(f"cannot use {type(v).__name__} as a coefficient")
    return out


def falling(n: int, i: int) -> int:
    """Falling factorial ``n (n-1) ... (n-i+1)``."""
    out = 1
    for k in range(i):
        out *= n - k
    return out


@dataclass(frozen=True)
class SecondOrderSeed:
    """The equation ``f'' = a1 f' + a0 f``, i.e. the operator ``Dx^2 - a1 Dx - a0``."""

    a0: RationalFunction
    a1: RationalFunction

    def __post_init__(self):
        object.__setattr__(self, "a0", _rf(self.a0))
        object.__setattr__(self, "a1", _rf(self.a1))

    @classmethod
    def from_operator(cls, op: DiffOperator) -> "SecondOrderSeed":
        if op.order != 2:
            raise ValueError("seed operator must have order 2")
        c2, c1, c0 = op.coeffs[2], op.coeffs[1], op.coeffs[0]
        return cls(a0=-c0 / c2, a1=-c1 / c2)

    def operator(self) -> DiffOperator:
        return DiffOperator([-self.a0, -self.a1, RF_ONE])

    def is_laurent(self) -> bool:
        return self.a0.is_laurent() and self.a1.is_laurent()


class QMatrix:
    """``(n+1) x (n+2)`` matrix with ``d^j(f**n) = sum_i q[i][j] f**(n-i) f'**i``."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: list[list[RationalFunction]]):
        self.n = n
        self.entries = entries

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def shape(self):
        return (self.n + 1, self.n + 2)

    def column(self, j: int) -> list[RationalFunction]:
        return [row[j] for row in self.entries]

    def dump(self, var: str = "x") -> str:
        """Row-major text dump, one bracketed row per line."""
        lines = []
        for row in self.entries:
            lines.append("[" + ", ".join(format_rational_function(e, var) for e in row) + "]")
        return "\n".join(lines)

    def __repr__(self):
        return f"QMatrix(n={self.n})"


def build_Q(seed: SecondOrderSeed, n: int) -> QMatrix:
    """Columns from ``q_{i,j+1} = (n+1-i) q_{i-1,j} + q_{i,j}' + i a1 q_{i,j}
    + (i+1) a0 q_{i+1,j}`` starting at ``e_0``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a0, a1 = seed.a0, seed.a1
    rows = n + 1
    cols = [[RF_ONE] + [RF_ZERO] * n]
    for j in range(n + 1):
        prev = cols[-1]
        nxt = []
        for i in range(rows):
            acc = RF_ZERO
            if i >= 1 and not prev[i - 1].is_zero():
                acc = acc + prev[i - 1] * (n + 1 - i)
            q = prev[i]
            if not q.is_zero():
                acc = acc + q.derivative()
                if i:
                    acc = acc + a1 * q * i
            if i + 1 < rows and not prev[i + 1].is_zero():
                acc = acc + a0 * prev[i + 1] * (i + 1)
            nxt.append(acc)
        cols.append(nxt)
    entries = [[cols[j][i] for j in range(n + 2)] for i in range(rows)]
    return QMatrix(n, entries)


def kernel_vector(Q: QMatrix) -> list[RationalFunction]:
    """Back substitution on the triangular ``Q`` with ``v_{n+1} = 1``."""
    n = Q.n
    v: list[RationalFunction] = [RF_ZERO] * (n + 2)
    v[n + 1] = RF_ONE
    for i in range(n, -1, -1):
        acc = RF_ZERO
        for j in range(i + 1, n + 2):
            q = Q.entries[i][j]
            if not q.is_zero() and not v[j].is_zero():
                acc = acc + q * v[j]
        diag = Q.entries[i][i]
        v[i] = -(acc / diag)
    return v


@dataclass
class PowerODE:
    """Annihilator of ``f**n`` with coprime polynomial coefficients ``kernel``."""

    n: int
    kernel: list[Polynomial]
    operator: DiffOperator
    seed: SecondOrderSeed

    @property
    def order(self) -> int:
        return self.operator.order

    def max_degree(self) -> int:
        return max(p.degree for p in self.kernel if not p.is_zero())


def power_operator(seed: SecondOrderSeed, n: int) -> PowerODE:
    check_power(n)
    v = kernel_vector(build_Q(seed, n))
    polys = canonicalize_polys(clear_denominators(v))
    return PowerODE(n=n, kernel=polys, operator=DiffOperator.from_polys(polys), seed=seed)


# ---------------------------------------------------------------------------
# degree bound
# ---------------------------------------------------------------------------

def seed_bounds(seed: SecondOrderSeed) -> tuple:
    """``(m0, M0, m1, M1)``: min/max Laurent degrees of ``a0`` and ``a1``."""
    for name, c in (("a0", seed.a0), ("a1", seed.a1)):
        if not c.is_laurent():
            raise ValueError(f"{name} must be a Laurent polynomial, got {c}")
    m0, M0 = laurent_bounds(seed.a0)
    m1, M1 = laurent_bounds(seed.a1)
    return m0, M0, m1, M1


def degree_bound(seed: SecondOrderSeed, n: int) -> int:
    """Upper bound on the largest degree of the coprime kernel polynomials,
    ``max{M0+(n-1)M1, n M1, 0} - min{m0, m1} - (n-1) m1``.

    Raises :class:`HypothesisError` unless ``m1 <= -1``, ``M1 >= -1``,
    ``m0 >= 2 m1`` and ``M0 <= 2 M1`` (a zero ``a0`` has ``m0 = +inf``,
    ``M0 = -inf``).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m0, M0, m1, M1 = seed_bounds(seed)
    if not m1 <= -1:
        raise HypothesisError("m1 <= -1", f"m1 = {m1}")
    if not M1 >= -1:
        raise HypothesisError("M1 >= -1", f"M1 = {M1}")
    if not m0 >= 2 * m1:
        raise HypothesisError("m0 >= 2*m1", f"m0 = {m0}, m1 = {m1}")
    if not M0 <= 2 * M1:
        raise HypothesisError("M0 <= 2*M1", f"M0 = {M0}, M1 = {M1}")
    top = max(M0 + (n - 1) * M1, n * M1, 0)
    return int(top - min(m0, m1) - (n - 1) * m1)


def mindeg_lower_bound(seed: SecondOrderSeed, i: int, j: int):
    """Lower bound on the Laurent valuation of ``q_{ij}`` for ``j >= 2`` used in
    the degree estimate: ``m0 + (j-2) m1`` for ``i = 0`` and ``(j-i) m1`` for
    ``0 < i < j``.  Returns ``POS_INF`` where no bound is claimed."""
    m0, _, m1, _ = seed_bounds(seed)
    if j < 2 or i >= j:
        return POS_INF if i != j else 0
    if i == 0:
        return m0 + (j - 2) * m1
    return (j - i) * m1


# ---------------------------------------------------------------------------
# exponents and the tridiagonal eigen-matrix
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExponentPrediction:
    lam1: GaussianRational
    lam2: GaussianRational
    n: int
    values: tuple

    def sorted(self):
        return sorted(self.values, key=lambda z: (z.re, z.im))


def predicted_exponents(lam1, lam2, n: int) -> ExponentPrediction:
    """``(n-k) lam1 + k lam2`` for ``k = 0..n`` (duplicates kept)."""
    l1, l2 = gq(lam1), gq(lam2)
    values = tuple(l1 * (n - k) + l2 * k for k in range(n + 1))
    return ExponentPrediction(l1, l2, n, values)


def eig_matrix(lam1, lam2, n: int) -> list[list[GaussianRational]]:
    """Tridiagonal ``M`` with ``M[i][i] = i (lam1+lam2)``, ``M[i+1][i] = n - i``
    and ``M[i][i+1] = -(i+1) lam1 lam2``; its eigenvalues are
    ``(n-k) lam1 + k lam2``."""
    l1, l2 = gq(lam1), gq(lam2)
    s, p = l1 + l2, l1 * l2
    zero = gq(0)
    M = [[zero] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        M[i][i] = s * i
        if i < n:
            M[i + 1][i] = gq(n - i)
            M[i][i + 1] = -p * (i + 1)
    return M


def eig_matrix_scaled(n: int, z) -> list[list[GaussianRational]]:
    """``D M D^{-1} / lam1`` with ``lam2 = z lam1`` and ``D = diag((-lam2)^i)``.

    Entries: diagonal ``i (1+z)``, super-diagonal ``i+1``, sub-diagonal
    ``-(n-i) z``.  Eigenvalues ``mu_k = k z + (n-k)``.
    """
    z = gq(z)
    zero = gq(0)
    M = [[zero] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        M[i][i] = (z + 1) * i
        if i < n:
            M[i][i + 1] = gq(i + 1)
            M[i + 1][i] = -z * (n - i)
    return M


def charpoly_tridiagonal(M: Sequence[Sequence]) -> Polynomial:
    """``det(lam I - M)`` by the three-term continuant recurrence."""
    size = len(M)
    lam = Polynomial((0, 1))
    prev, cur = Polynomial.constant(1), lam - M[0][0]
    for k in range(1, size):
        nxt = cur * (lam - M[k][k]) - prev.scale(M[k][k - 1] * M[k - 1][k])
        prev, cur = cur, nxt
    return cur


def eig_vector(n: int, k: int, z) -> list[GaussianRational]:
    """Eigenvector ``v^k`` of :func:`eig_matrix_scaled` for ``mu_k = k z + n - k``:
    ``v_l = sum_j C(n-k, l-j) C(k, j) z^j``.

    For ``z = 1`` all ``mu_k`` coincide and the generalized eigenvectors
    ``v_l = C(n-k, l)`` are returned instead; they satisfy
    ``(n I - M') v^0 = 0`` and ``(n I - M') v^k = k v^{k-1}``.
    """
    if not (0 <= k <= n):
        raise IndexError(f"k must satisfy 0 <= k <= n, got k={k}, n={n}")
    z = gq(z)
    if z == 1:
        return [gq(binomial(n - k, l)) for l in range(n + 1)]
    out = []
    for l in range(n + 1):
        acc = gq(0)
        zp = gq(1)
        for j in range(0, min(k, l) + 1):
            c = binomial(n - k, l - j) * binomial(k, j)
            if c:
                acc = acc + zp * c
            zp = zp * z
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# terminating 2F1 identity
# ---------------------------------------------------------------------------

def _neg_int(v) -> int | None:
    """``m`` if ``v == -m`` for an integer ``m >= 0``, else ``None``."""
    v = gq(v)
    if v.im != 0 or v.re.denominator != 1 or v.re > 0:
        return None
    return int(-v.re)


def hyp2f1_terminating(a, b, c, z) -> GaussianRational:
    """Exact ``2F1(a, b; c; z)`` when ``a`` or ``b`` is a nonpositive integer."""
    a, b, c, z = gq(a), gq(b), gq(c), gq(z)
    stops = [m for m in (_neg_int(a), _neg_int(b)) if m is not None]
    if not stops:
        raise ValueError("2F1 is not terminating: no nonpositive-integer upper parameter")
    top = min(stops)
    mc = _neg_int(c)
    if mc is not None and mc < top:
        raise UndefinedParameterError(
            f"lower parameter c={c} is a nonpositive integer inside the summation range 0..{top}")
    term = gq(1)
    total = gq(1)
    for s in range(top):
        term = term * (a + s) * (b + s) * z / ((c + s) * (s + 1))
        total = total + term
    return total


def check_2f1_recursion(k: int, l: int, n: int, z) -> bool:
    """Exact check of
    ``c(c-1) F(-k,-l-1;c-1) - c(c-1+(k-l)z) F(-k,-l;c) - l(c+k) z F(-k,-l+1;c+1) = 0``
    with ``c = n - k - l + 1``."""
    z = gq(z)
    c = gq(n - k - l + 1)
    t1 = c * (c - 1) * hyp2f1_terminating(-k, -l - 1, c - 1, z)
    t2 = c * (c - 1 + z * (k - l)) * hyp2f1_terminating(-k, -l, c, z)
    t3 = c * 0
    if l != 0:
        t3 = (c + k) * z * l * hyp2f1_terminating(-k, -l + 1, c + 1, z)
    return (t1 - t2 - t3).is_zero()


def recursion_defined(k: int, l: int, n: int) -> bool:
    """Whether all three series in :func:`check_2f1_recursion` are defined."""
    try:
        c = n - k - l + 1
        hyp2f1_terminating(-k, -l - 1, c - 1, 0)
        hyp2f1_terminating(-k, -l, c, 0)
        if l:
            hyp2f1_terminating(-k, -l + 1, c + 1, 0)
    except UndefinedParameterError:
        return False
    return True
