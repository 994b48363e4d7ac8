"""Euler-operator form, indicial polynomials and exponents."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from ..algebra import (
    ONE_POLY,
    ZERO,
    ZERO_POLY,
    GaussianRational,
    Polynomial,
    RationalFunction,
    falling_factorial_poly,
    gaussian_int_gcd,
    gq,
    squarefree_decomposition,
)
from .operators import DiffOperator, WeylElement

INFINITY = math.inf


class ThetaForm:
    """``sum_a x^a q_a(theta)`` with ``theta = x Dx``; ``terms[a]`` is ``q_a``
    as a polynomial in ``lam``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Polynomial]):
        self.terms = {a: q for a, q in terms.items() if not q.is_zero()}

    @property
    def min_power(self) -> int:
        return min(self.terms)

    @property
    def max_power(self) -> int:
        return max(self.terms)

    def q(self, a: int) -> Polynomial:
        return self.terms.get(a, ZERO_POLY)

    def to_diff_operator(self) -> DiffOperator:
        """Exact inverse of :func:`to_theta_form`; coefficients are Laurent."""
        acc: dict[int, dict[int, GaussianRational]] = {}
        for s, q in self.terms.items():
            for b, d in enumerate(_falling_basis(q)):
                if d.is_zero():
                    continue
                row = acc.setdefault(b, {})
                row[s + b] = row.get(s + b, ZERO) + d
        r = max(acc) if acc else 0
        return DiffOperator([RationalFunction.laurent(acc.get(b, {})) for b in range(r + 1)])

    def to_weyl(self) -> tuple[WeylElement, int]:
        """Polynomial representative ``x^shift * self`` and the shift used."""
        op = self.to_diff_operator()
        low = min((c.as_laurent().mindeg for c in op.coeffs if not c.is_zero()), default=0)
        shift = max(0, -low)
        terms = {}
        for b, c in enumerate(op.coeffs):
            for k, v in c.as_laurent().terms().items():
                terms[(k + shift, b)] = v
        return WeylElement(terms), shift

    def __eq__(self, other):
        if not isinstance(other, ThetaForm):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        inner = ", ".join(f"{a}: {q}" for a, q in sorted(self.terms.items()))
        return f"ThetaForm({{{inner}}})"


def _falling_basis(q: Polynomial) -> list[GaussianRational]:
    """Coefficients ``d_b`` with ``q(lam) = sum_b d_b [lam]_b`` (Newton series)."""
    n = max(q.degree, 0)
    vals = [q(j) for j in range(n + 1)]
    out = []
    fact = 1
    for b in range(n + 1):
        out.append(vals[0] / fact)
        vals = [vals[j + 1] - vals[j] for j in range(len(vals) - 1)]
        fact *= b + 1
    return out


def _theta_from_polys(polys: Sequence[Polynomial]) -> ThetaForm:
    terms: dict[int, Polynomial] = {}
    cache = {}
    for k, p in enumerate(polys):
        if p.is_zero():
            continue
        if k not in cache:
            cache[k] = falling_factorial_poly(k)
        for j, c in enumerate(p.coeffs):
            if c.is_zero():
                continue
            a = j - k
            terms[a] = terms.get(a, ZERO_POLY) + cache[k].scale(c)
    return ThetaForm(terms)


def to_theta_form(op) -> ThetaForm:
    """Rewrite ``sum c_k(x) Dx^k`` as ``sum_a x^a q_a(theta)`` via
    ``x^k Dx^k = [theta]_k``.  Coefficients must be Laurent polynomials."""
    if isinstance(op, WeylElement):
        op = op.to_diff_operator()
    terms: dict[int, Polynomial] = {}
    for k, c in enumerate(op.coeffs):
        if c.is_zero():
            continue
        lp = c.as_laurent()
        if lp is None:
            raise ValueError("theta form needs Laurent-polynomial coefficients")
        ff = falling_factorial_poly(k)
        for j, v in lp.terms().items():
            terms[j - k] = terms.get(j - k, ZERO_POLY) + ff.scale(v)
    return ThetaForm(terms)


# ---------------------------------------------------------------------------
# roots
# ---------------------------------------------------------------------------

def _gaussian_integer_primitive(p: Polynomial) -> tuple[list[tuple[int, int]], tuple[int, int]]:
    den = 1
    for c in p.coeffs:
        den = math.lcm(den, c.parts[2])
    ints = []
    g = (0, 0)
    for c in p.coeffs:
        a, b, d = c.parts
        v = (a * (den // d), b * (den // d))
        ints.append(v)
        if v != (0, 0):
            g = gaussian_int_gcd(g, v)
    gr, gi = g
    n = gr * gr + gi * gi
    prim = [((a * gr + b * gi) // n, (b * gr - a * gi) // n) for a, b in ints]
    return prim, prim[-1]


def _numeric_roots(p: Polynomial) -> np.ndarray:
    if p.degree < 1:
        return np.array([], dtype=complex)
    coeffs = np.array([complex(c) for c in reversed(p.coeffs)])
    # numpy.roots: eigenvalues of the (LAPACK-balanced) companion matrix
    return np.roots(coeffs)


def _round_gaussian(z: complex, scale: int) -> GaussianRational:
    return GaussianRational(Fraction(round(z.real * scale), scale), Fraction(round(z.imag * scale), scale))


def _exact_roots_squarefree(p: Polynomial) -> list[GaussianRational] | None:
    """All roots of a squarefree polynomial if they lie in Q(i), else ``None``."""
    found: list[GaussianRational] = []
    rest = p.monic()
    while rest.degree >= 1:
        if rest.degree == 1:
            found.append(-rest[0] / rest[1])
            break
        _, (lr, li) = _gaussian_integer_primitive(rest)
        # a root alpha/beta in lowest terms has beta | lead, so root*lead lies in Z[i]
        lead_c = complex(lr, li)
        hit = None
        for z in _numeric_roots(rest):
            cands = []
            w = z * lead_c
            cands.append(GaussianRational(round(w.real), round(w.imag)) / GaussianRational(lr, li))
            bound = max(abs(lr), abs(li), 1) ** 2
            cands.append(GaussianRational(Fraction(z.real).limit_denominator(bound),
                                          Fraction(z.imag).limit_denominator(bound)))
            for cand in cands:
                if rest(cand).is_zero():
                    hit = cand
                    break
            if hit is not None:
                break
        if hit is None:
            return None
        found.append(hit)
        rest = rest.exact_div(Polynomial((-hit, 1)))
    return found


def polynomial_roots(p: Polynomial) -> tuple[list[GaussianRational] | None, list[complex]]:
    """Roots with multiplicity: exact Gaussian-rational roots (or ``None`` if
    some root is not in Q(i)) and floating roots.

    Multiplicities come from an exact squarefree decomposition so repeated
    roots are computed to full accuracy numerically as well.
    """
    if p.degree < 1:
        return [], []
    exact: list[GaussianRational] | None = []
    numeric: list[complex] = []
    for factor, mult in squarefree_decomposition(p):
        nums = list(_numeric_roots(factor))
        ex = _exact_roots_squarefree(factor)
        if ex is None:
            exact = None
        elif exact is not None:
            exact.extend(r for r in ex for _ in range(mult))
        if ex is not None:
            # report the numeric roots in the same order as the exact ones
            nums = [min(nums, key=lambda z, r=r: abs(z - complex(r))) for r in ex]
        numeric.extend(z for z in nums for _ in range(mult))
    return exact, numeric


# ---------------------------------------------------------------------------
# indicial equation
# ---------------------------------------------------------------------------

@dataclass
class IndicialResult:
    """Indicial data of an operator at a point (``math.inf`` for infinity)."""

    point: object
    regular: bool
    order: int
    poly: Polynomial | None = None
    exponents_exact: list | None = None
    exponents_numeric: list = field(default_factory=list)

    def sorted_exponents(self) -> list:
        if self.exponents_exact is None:
            raise ValueError("exponents are not all Gaussian rational")
        return sorted(self.exponents_exact, key=lambda z: (z.re, z.im))


def _is_infinity(point) -> bool:
    return isinstance(point, str) and point.lower() in ("inf", "oo", "infinity") or \
        (isinstance(point, float) and math.isinf(point))


def indicial(op, point=0) -> IndicialResult:
    """Indicial polynomial and exponents of ``op`` at a finite point or infinity.

    At a finite point ``x0`` the operator is translated to ``x0 = 0``; the
    indicial polynomial is the monic lowest-``x`` theta coefficient.  At
    infinity the highest-``x`` theta coefficient is used.  A point is regular
    (singular or ordinary) exactly when that coefficient has full degree.
    """
    if isinstance(op, WeylElement):
        op = op.to_diff_operator()
    if op.is_zero():
        raise ValueError("indicial equation of the zero operator is undefined")
    r = op.order
    at_inf = _is_infinity(point)
    if not at_inf:
        point = gq(point)
        op = op.translate(point)
    polys = op.cleared()
    tf = _theta_from_polys(polys)
    a = tf.max_power if at_inf else tf.min_power
    q = tf.q(a)
    pt = INFINITY if at_inf else point
    if q.degree != r:
        return IndicialResult(point=pt, regular=False, order=r)
    q = q.monic()
    exact, numeric = polynomial_roots(q)
    return IndicialResult(point=pt, regular=True, order=r, poly=q,
                          exponents_exact=exact, exponents_numeric=numeric)


def exponent_check(res: IndicialResult, lam) -> bool:
    """Exact test ``b(lam) == 0``."""
    if not res.regular or res.poly is None:
        raise ValueError("exponent_check needs a regular singular point")
    return res.poly(gq(lam)).is_zero()


class FourierHypothesisError(ValueError):
    pass


def fourier_exponents(exps: Sequence, d: int, r: int, side: str) -> list:
    """Map exponents across the Fourier transform.

    ``side="0->inf"``: exponents ``mu`` at 0 (excluding the integers
    ``0..r-d-1``) become ``-mu-1`` at infinity; needs ``d <= r``.
    ``side="inf->0"``: exponents at infinity become ``-mu-1`` at 0 together
    with ``0, 1, ..., d-r-1``; needs ``d >= r``.
    Here ``d`` is the degree of the leading coefficient and ``r`` the order.
    """
    side = side.replace(" ", "").lower()
    mapped = [-gq(m) - 1 for m in exps]
    if side in ("0->inf", "0->oo"):
        if d > r:
            raise FourierHypothesisError(f"need d <= r at 0, got d={d}, r={r}")
        return mapped
    if side in ("inf->0", "oo->0"):
        if d < r:
            raise FourierHypothesisError(f"need d >= r at infinity, got d={d}, r={r}")
        return mapped + [gq(j) for j in range(d - r)]
    raise ValueError(f"unknown side {side!r}; use '0->inf' or 'inf->0'")
