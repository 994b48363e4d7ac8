"""Densities of sums of i.i.d. variables: beta sums, uniform sums, cubes of normals.

The characteristic function of a single summand satisfies a second-order ODE;
its n-th power satisfies the power ODE, and the Fourier map turns that into
an ODE for the density of the sum.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Sequence

import numpy as np

from .algebra import (
    I,
    LaurentPolynomial,
    Polynomial,
    RationalFunction,
    binomial,
    gq,
    parse_laurent,
    solve_exact,
)
from .config import check_power
from .power import SecondOrderSeed, build_Q, power_operator
from .weyl import WeylElement, operator_from_dict, operator_from_text, operator_to_dict


def _rational(v, name: str) -> Fraction:
    if isinstance(v, str):
        v = Fraction(v)
    v = Fraction(v)
    if v <= 0:
        raise ValueError(f"{name} must be positive, got {v}")
    return v


@dataclass(frozen=True)
class BetaParams:
    a: Fraction
    b: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, "a", _rational(self.a, "a"))
        object.__setattr__(self, "b", _rational(self.b, "b"))
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")


@dataclass
class DensityODE:
    """Polynomial-coefficient operator annihilating the density of a sum."""

    n: int
    operator: WeylElement
    provenance: str = ""

    @property
    def order(self) -> int:
        return self.operator.order

    def leading_coefficient(self) -> Polynomial:
        return self.operator.coefficient_polys()[self.order]

    def to_dict(self) -> dict:
        d = operator_to_dict(self.operator)
        d["n"] = self.n
        d["provenance"] = self.provenance
        return d

    @classmethod
    def from_dict(cls, obj: dict) -> "DensityODE":
        op = operator_from_dict(obj).to_weyl()
        return cls(n=int(obj.get("n", 0)), operator=op, provenance=obj.get("provenance", ""))


def _density_from_seed(seed: SecondOrderSeed, n: int) -> WeylElement:
    pw = power_operator(seed, n)
    return pw.operator.to_weyl().fourier().canonical()


# ---------------------------------------------------------------------------
# beta sums
# ---------------------------------------------------------------------------

def beta_char_seed(a, b) -> SecondOrderSeed:
    """Characteristic function of Beta(a, b): ``Dt^2 - (i - (a+b)/t) Dt - i a / t``."""
    a = _rational(a, "a")
    b = _rational(b, "b")
    a1 = RationalFunction.laurent({0: I, -1: -(a + b)})
    a0 = RationalFunction.laurent({-1: I * a})
    return SecondOrderSeed(a0=a0, a1=a1)


def beta_density_ode(p: BetaParams) -> DensityODE:
    check_power(p.n)
    op = _density_from_seed(beta_char_seed(p.a, p.b), p.n)
    return DensityODE(n=p.n, operator=op, provenance=f"beta(a={p.a}, b={p.b}) sum of {p.n}")


def _pochhammer(x, k: int):
    out = Fraction(1)
    for j in range(k):
        out *= x + j
    return out


def beta_initial_terms(a, b, n: int, j: int) -> tuple:
    """Predicted lowest Laurent terms ``(exponent, coeff)`` of ``q_{0,j}`` and
    ``q_{1,j}`` for the beta seed (``j >= 2`` resp. ``j >= 1``):

    ``ini q_{0,j} = i (-1)^j n a/(a+b) (a+b)_{j-1} t^{-(j-1)}``,
    ``ini q_{1,j} = (-1)^{j-1} n (a+b)_{j-1} t^{-(j-1)}``.
    """
    a, b = Fraction(a), Fraction(b)
    s = a + b
    poch = _pochhammer(s, j - 1)
    q0 = I * ((-1) ** j * n * a / s * poch)
    q1 = gq((-1) ** (j - 1) * n * poch)
    return (-(j - 1), q0), (-(j - 1), q1)


def cube_initial_terms(n: int, j: int) -> tuple:
    """Predicted lowest Laurent terms of ``q_{0,j}`` and ``q_{1,j}`` for the
    cube seed: ``(-1)^{j-1} 5n (3t)^{-3(j-1)+1}`` and ``(-1)^{j-1} n (3t)^{-3(j-1)}``."""
    e0 = -3 * (j - 1) + 1
    e1 = -3 * (j - 1)
    c0 = Fraction((-1) ** (j - 1) * 5 * n) * Fraction(3) ** e0
    c1 = Fraction((-1) ** (j - 1) * n) * Fraction(3) ** e1
    return (e0, gq(c0)), (e1, gq(c1))


def initial_terms_of_Q(seed: SecondOrderSeed, n: int, row: int) -> list:
    """Lowest Laurent terms ``(exponent, coeff)`` of ``q_{row, j}``, ``j = 0..n+1``
    (``None`` for zero entries)."""
    Q = build_Q(seed, n)
    out = []
    for j in range(n + 2):
        e = Q[row, j]
        out.append(None if e.is_zero() else e.as_laurent().initial_term())
    return out


# ---------------------------------------------------------------------------
# uniform sums
# ---------------------------------------------------------------------------

@dataclass
class PiecewisePolyDensity:
    """``f(x) = sum_{j <= k} c_j (x - j)^(n-1)`` on ``[k, k+1]``, ``k = 0..n-1``."""

    n: int
    c: list

    def piece(self, k: int) -> Polynomial:
        if not 0 <= k < self.n:
            raise IndexError(k)
        out = Polynomial.constant(0)
        for j in range(k + 1):
            out = out + Polynomial((-j, 1)) ** (self.n - 1) * self.c[j]
        return out

    @property
    def pieces(self) -> list[Polynomial]:
        return [self.piece(k) for k in range(self.n)]

    def __call__(self, x):
        """Exact value for rationals, float for floats; zero outside ``[0, n]``."""
        if isinstance(x, (int, Fraction)):
            x = Fraction(x)
            if x < 0 or x > self.n:
                return Fraction(0)
            k = min(int(math.floor(x)), self.n - 1)
            return self.piece(k)(x).re
        return float(self.evaluate(np.asarray([x], dtype=float))[0])

    def evaluate(self, xs) -> np.ndarray:
        """Float evaluation.  Uses the symmetry ``f(x) = f(n - x)`` and each
        piece expanded around its left end, which avoids the cancellation of
        the monomial form near ``x = n``."""
        xs = np.asarray(xs, dtype=float)
        inside = (xs >= 0) & (xs <= self.n)
        u = np.where(xs > self.n / 2, self.n - xs, xs)
        out = np.zeros_like(xs)
        for k, p in enumerate(self.pieces):
            if k > self.n / 2:
                break
            local = [float(c.re) for c in p.shift(k).coeffs]
            mask = inside & (u >= k) & (u < k + 1)
            out[mask] = np.polynomial.polynomial.polyval(u[mask] - k, local)
        return out

    def derivative_jumps(self, order: int) -> list:
        """Exact jumps of the ``order``-th derivative at ``x = 0, 1, ..., n``."""
        jumps = []
        pieces = [Polynomial.constant(0)] + self.pieces + [Polynomial.constant(0)]
        for k in range(self.n + 1):
            left = pieces[k].derivative(order)(k)
            right = pieces[k + 1].derivative(order)(k)
            jumps.append(right - left)
        return jumps

    def integral(self) -> Fraction:
        total = gq(0)
        for k, p in enumerate(self.pieces):
            coeffs = [gq(0)] + [c / (j + 1) for j, c in enumerate(p.coeffs)]
            prim = Polynomial(coeffs)
            total = total + prim(k + 1) - prim(k)
        return total.re

    def to_dict(self) -> dict:
        return {"n": self.n, "c": [[c.numerator, c.denominator] for c in self.c]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj: dict) -> "PiecewisePolyDensity":
        return cls(n=int(obj["n"]), c=[Fraction(p, q) for p, q in obj["c"]])


def irwin_hall_system(n: int):
    """Rows ``((n-j)^(n-r))_j`` for ``r = 0..n-1`` and right side ``(n, 0, ..., 0)``."""
    matrix = [[Fraction(n - j) ** (n - r) for j in range(n)] for r in range(n)]
    rhs = [Fraction(n)] + [Fraction(0)] * (n - 1)
    return matrix, rhs


def irwin_hall_density(n: int) -> PiecewisePolyDensity:
    """Exact density of the sum of ``n`` independent uniform(0, 1) variables.

    The density vanishes to order ``n - 1`` at ``x = n`` and integrates to one;
    these ``n`` linear conditions on ``c_j`` form an invertible Vandermonde-type
    system solved exactly.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    matrix, rhs = irwin_hall_system(n)
    sol = solve_exact(matrix, rhs)
    return PiecewisePolyDensity(n=n, c=[gq(v).re for v in sol])


def uniform_density_operator(n: int) -> WeylElement:
    """``x (x-1) ... (x-n) Dx^n``."""
    lead = Polynomial.constant(1)
    for k in range(n + 1):
        lead = lead * Polynomial((-k, 1))
    return WeylElement({(a, n): c for a, c in enumerate(lead.coeffs) if not c.is_zero()})


# ---------------------------------------------------------------------------
# cubes of standard normals
# ---------------------------------------------------------------------------

def cube_char_seed() -> SecondOrderSeed:
    """``27 t^3 Dt^2 + (81 t^2 + 1) Dt + 15 t`` divided by ``27 t^3``."""
    a1 = RationalFunction.laurent({-1: -3, -3: Fraction(-1, 27)})
    a0 = RationalFunction.laurent({-2: Fraction(-5, 9)})
    return SecondOrderSeed(a0=a0, a1=a1)


def cube_char_operator() -> WeylElement:
    t = WeylElement.x()
    d = WeylElement.d()
    return t ** 3 * d * d * 27 + (t * t * 81 + 1) * d + t * 15


def cube_density_ode(n: int) -> DensityODE:
    check_power(n)
    op = _density_from_seed(cube_char_seed(), n)
    return DensityODE(n=n, operator=op, provenance=f"sum of {n} cubed standard normals")


def cube_density_n1(x):
    """Density of ``X^3`` for standard normal ``X``:
    ``|x|^(-2/3) exp(-|x|^(2/3)/2) / (3 sqrt(2 pi))``."""
    ax = np.abs(np.asarray(x, dtype=float))
    return ax ** (-2.0 / 3.0) * np.exp(-ax ** (2.0 / 3.0) / 2) / (3 * math.sqrt(2 * math.pi))


# ---------------------------------------------------------------------------
# reference fixtures
# ---------------------------------------------------------------------------

def _load(name: str) -> dict:
    with resources.files("holopow.data").joinpath(name).open("r", encoding="utf-8") as fh:
        return json.load(fh)


class ParametricOperator:
    """Operator whose coefficients are polynomials in ``x`` with coefficients in
    ``Z[a, b]``; ``table[k][e]`` lists ``(i, j, c)`` for ``c a^i b^j x^e Dx^k``."""

    def __init__(self, table):
        self.table = table

    @property
    def order(self) -> int:
        return len(self.table) - 1

    def at(self, a, b) -> WeylElement:
        a, b = Fraction(a), Fraction(b)
        terms = {}
        for k, row in enumerate(self.table):
            for e, monos in enumerate(row):
                v = sum((Fraction(c) * a ** i * b ** j for i, j, c in monos), Fraction(0))
                if v:
                    terms[(e, k)] = gq(v)
        return WeylElement(terms)


@dataclass
class QExample:
    seed: SecondOrderSeed
    n: int
    Q: list
    kernel: list
    operator: object = field(default=None)


@lru_cache(maxsize=None)
def reference_fixture(name: str):
    """Transcribed reference objects.

    ``"f3"``: :class:`ParametricOperator` for the beta sum with ``n = 3``;
    ``"f4"``: :class:`WeylElement` for the sum of four cubed normals;
    ``"ex_qx"``: :class:`QExample` for the seed ``a0 = 1 + x^-2``, ``a1 = -x^-1``, ``n = 3``.
    """
    if name == "f3":
        return ParametricOperator(_load("f3.json")["coeffs"])
    if name == "f4":
        return operator_from_dict(_load("f4.json")).to_weyl()
    if name == "ex_qx":
        raw = _load("ex_qx.json")
        seed = SecondOrderSeed(a0=parse_laurent(raw["seed"]["a0"]).to_rational_function(),
                               a1=parse_laurent(raw["seed"]["a1"]).to_rational_function())
        Q = [[parse_laurent(e).to_rational_function() for e in row] for row in raw["Q"]]
        kernel = [parse_laurent(e).to_rational_function() for e in raw["kernel"]]
        return QExample(seed=seed, n=raw["n"], Q=Q, kernel=kernel,
                        operator=operator_from_text(raw["operator"]))
    raise KeyError(f"unknown fixture {name!r}; expected one of 'f3', 'f4', 'ex_qx'")


FIXTURE_NAMES = ("f3", "f4", "ex_qx")
