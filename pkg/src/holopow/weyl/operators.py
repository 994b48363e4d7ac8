"""Linear differential operators.

Two representations are used:

* :class:`DiffOperator` -- ``sum_k c_k(x) Dx^k`` with rational-function
  coefficients (the ring ``C(x)<Dx>``).
* :class:`WeylElement` -- normal-ordered ``sum c_ab x^a Dx^b`` with scalar
  coefficients (the Weyl algebra), where the Fourier map lives.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import comb, lcm, perm
from typing import Iterable, Mapping, Sequence

from ..algebra import (
    I,
    ONE,
    ONE_POLY,
    RF_ZERO,
    ZERO,
    ZERO_POLY,
    GaussianRational,
    LaurentPolynomial,
    Polynomial,
    RationalFunction,
    clear_denominators,
    gaussian_int_gcd,
    gq,
    poly_gcd,
    unit_normalizer,
)


def _as_rf(c) -> RationalFunction:
    if isinstance(c, RationalFunction):
        return c
    if isinstance(c, Polynomial):
        return RationalFunction._from_clean(c, ONE_POLY)
    if isinstance(c, LaurentPolynomial):
        return c.to_rational_function()
    if isinstance(c, str):
        from ..algebra import parse_rational_function
        return parse_rational_function(c)
    return RationalFunction.constant(c)


def canonicalize_polys(polys: Sequence[Polynomial]) -> list[Polynomial]:
    """Scale a coefficient list to its canonical representative.

    Denominators of the scalars are cleared, the Gaussian-integer content is
    divided out and the unit is fixed so that the leading coefficient of the
    last nonzero polynomial lies in ``re > 0, im >= 0``.
    """
    polys = list(polys)
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        raise ValueError("cannot canonicalize the zero operator")
    den = 1
    for p in nonzero:
        for c in p.coeffs:
            den = lcm(den, c.parts[2])
    g = (0, 0)
    ints = []
    for p in polys:
        row = []
        for c in p.coeffs:
            a, b, d = c.parts
            k = den // d
            row.append((a * k, b * k))
            if g != (1, 0) and (a or b):
                g = gaussian_int_gcd(g, (a * k, b * k))
        ints.append(row)
    gr, gi = g
    gnorm = gr * gr + gi * gi
    out = []
    for row in ints:
        coeffs = []
        for a, b in row:
            # (a + bi) / (gr + gi i) = (a + bi)(gr - gi i) / |g|^2, exact in Z[i]
            coeffs.append(GaussianRational._raw(a * gr + b * gi, b * gr - a * gi, gnorm))
        out.append(Polynomial._from_clean(tuple(coeffs)))
    top = next(p for p in reversed(out) if not p.is_zero())
    u = unit_normalizer(top.lead)
    if u != ONE:
        out = [p.scale(u) for p in out]
    return out


def _strip_top(polys: list) -> list:
    while len(polys) > 1 and polys[-1].is_zero():
        polys.pop()
    return polys


class DiffOperator:
    """``sum_k coeffs[k] * Dx**k`` with :class:`RationalFunction` coefficients.

    ``coeffs`` never ends in a zero entry except for the zero operator, which is
    stored as a single zero coefficient.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [_as_rf(c) for c in coeffs]
        if not cs:
            cs = [RF_ZERO]
        while len(cs) > 1 and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_polys(cls, polys: Sequence[Polynomial]) -> "DiffOperator":
        return cls([RationalFunction._from_clean(p, ONE_POLY) for p in polys])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_zero()

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.coeffs)

    def is_laurent(self) -> bool:
        return all(c.is_laurent() for c in self.coeffs)

    @property
    def leading_coefficient(self) -> RationalFunction:
        return self.coeffs[-1]

    def polys(self) -> list[Polynomial]:
        return [c.as_polynomial() for c in self.coeffs]

    # -- ring structure --------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, DiffOperator):
            other = DiffOperator([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (RF_ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (RF_ZERO,) * (n - len(other.coeffs))
        return DiffOperator([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return DiffOperator([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, DiffOperator):
            other = DiffOperator([other])
        return self + (-other)

    def __mul__(self, other):
        """Composition in ``C(x)<Dx>``: ``Dx * a = a * Dx + a'``."""
        if not isinstance(other, DiffOperator):
            r = _as_rf(other)
            return DiffOperator([c * r for c in self.coeffs]) if isinstance(other, (int, Fraction, GaussianRational)) \
                else self * DiffOperator([r])
        out = [RF_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for j, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            # Dx^j * b = sum_m C(j, m) b^(m) Dx^(j-m)
            for k, b in enumerate(other.coeffs):
                deriv = b
                for m in range(j + 1):
                    if deriv.is_zero():
                        break
                    out[j - m + k] = out[j - m + k] + a * deriv * comb(j, m)
                    deriv = deriv.derivative()
        return DiffOperator(out)

    def __rmul__(self, other):
        return DiffOperator([_as_rf(other) * c for c in self.coeffs])

    def translate(self, x0) -> "DiffOperator":
        """Substitute ``x -> x + x0`` (``Dx`` is unchanged)."""
        x0 = gq(x0)
        if x0.is_zero():
            return self
        return DiffOperator([c.shift(x0) for c in self.coeffs])

    def conj(self) -> "DiffOperator":
        return DiffOperator([c.conj() for c in self.coeffs])

    # -- action ------------------------------------------------------------
    def apply(self, f: RationalFunction) -> RationalFunction:
        """Exact action on a rational function."""
        f = _as_rf(f)
        acc = RF_ZERO
        for c in self.coeffs:
            if not c.is_zero():
                acc = acc + c * f
            f = f.derivative()
        return acc

    def residual(self, x, derivs: Sequence[complex]) -> complex:
        return residual_eval(self, x, derivs)

    # -- normal form -------------------------------------------------------
    def cleared(self) -> list[Polynomial]:
        """Polynomial coefficients after clearing denominators and removing
        the polynomial gcd (scalar content untouched)."""
        return clear_denominators(self.coeffs)

    def canonical(self) -> "DiffOperator":
        if self.is_zero():
            raise ValueError("zero operator has no canonical form")
        return DiffOperator.from_polys(canonicalize_polys(self.cleared()))

    def equals_up_to_scalar(self, other) -> bool:
        if isinstance(other, WeylElement):
            other = other.to_diff_operator()
        return self.canonical() == other.canonical()

    def to_weyl(self) -> "WeylElement":
        if not self.is_polynomial():
            raise ValueError("to_weyl needs polynomial coefficients; clear denominators first")
        terms = {}
        for b, c in enumerate(self.coeffs):
            for a, v in enumerate(c.num.coeffs):
                if not v.is_zero():
                    terms[(a, b)] = v
        return WeylElement(terms)

    def __eq__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"DiffOperator({self})"

    def __str__(self):
        from .serialize import operator_to_text
        return operator_to_text(self)


# ---------------------------------------------------------------------------
# Weyl algebra
# ---------------------------------------------------------------------------

def _ff(c: int, k: int) -> int:
    """Falling factorial ``c (c-1) ... (c-k+1)`` for ``0 <= k``."""
    return perm(c, k) if k <= c else 0


class WeylElement:
    """Normal-ordered element ``sum c[(a, b)] x^a Dx^b`` of the Weyl algebra."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        for (a, b), v in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError("Weyl monomials need nonnegative exponents")
            v = gq(v)
            if not v.is_zero():
                clean[(a, b)] = v
        self.terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: dict) -> "WeylElement":
        w = object.__new__(cls)
        w.terms = terms
        w._hash = None
        return w

    @classmethod
    def x(cls) -> "WeylElement":
        return cls({(1, 0): 1})

    @classmethod
    def d(cls) -> "WeylElement":
        return cls({(0, 1): 1})

    @classmethod
    def scalar(cls, c) -> "WeylElement":
        return cls({(0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def order(self) -> int:
        return max((b for _, b in self.terms), default=-1)

    @property
    def degree(self) -> int:
        """Highest power of ``x`` that appears."""
        return max((a for a, _ in self.terms), default=-1)

    def coefficient(self, a: int, b: int) -> GaussianRational:
        return self.terms.get((a, b), ZERO)

    def coefficient_polys(self) -> list[Polynomial]:
        r = self.order
        rows = [dict() for _ in range(max(r + 1, 1))]
        for (a, b), v in self.terms.items():
            rows[b][a] = v
        out = []
        for row in rows:
            if row:
                out.append(Polynomial([row.get(a, ZERO) for a in range(max(row) + 1)]))
            else:
                out.append(ZERO_POLY)
        return out

    def to_diff_operator(self) -> DiffOperator:
        return DiffOperator.from_polys(self.coefficient_polys())

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _coerce(o):
        if isinstance(o, WeylElement):
            return o
        if isinstance(o, (int, Fraction, GaussianRational)):
            return WeylElement.scalar(o)
        return None

    def __add__(self, other):
        o = WeylElement._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for k, v in o.terms.items():
            s = t.get(k, ZERO) + v
            if s.is_zero():
                t.pop(k, None)
            else:
                t[k] = s
        return WeylElement._from_clean(t)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement._from_clean({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        o = WeylElement._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = WeylElement._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> "WeylElement":
        c = gq(c)
        if c.is_zero():
            return WeylElement()
        return WeylElement._from_clean({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        out: dict = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                uv = u * v
                # x^a Dx^b x^c Dx^d = sum_k C(b,k) [c]_k x^(a+c-k) Dx^(b+d-k)
                for k in range(min(b, c) + 1):
                    key = (a + c - k, b + d - k)
                    term = uv * (comb(b, k) * _ff(c, k))
                    out[key] = out.get(key, ZERO) + term
        return WeylElement._from_clean({k: v for k, v in out.items() if not v.is_zero()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        result = WeylElement.scalar(1)
        for _ in range(k):
            result = result * self
        return result

    # -- Fourier -----------------------------------------------------------
    def _transform(self, unit: GaussianRational) -> "WeylElement":
        # x -> unit*Dx, Dx -> unit*x, then normal-order Dx^a x^b
        out: dict = {}
        powers = [ONE]
        for (a, b), v in self.terms.items():
            while len(powers) <= a + b:
                powers.append(powers[-1] * unit)
            c = v * powers[a + b]
            for k in range(min(a, b) + 1):
                key = (b - k, a - k)
                out[key] = out.get(key, ZERO) + c * (comb(a, k) * _ff(b, k))
        return WeylElement._from_clean({k: v for k, v in out.items() if not v.is_zero()})

    def fourier(self) -> "WeylElement":
        """Image under ``x -> i Dx, Dx -> i x``."""
        return self._transform(I)

    def inverse_fourier(self) -> "WeylElement":
        """Image under ``x -> -i Dx, Dx -> -i x``."""
        return self._transform(-I)

    def reflect(self) -> "WeylElement":
        """``x -> -x, Dx -> -Dx``."""
        return WeylElement._from_clean({(a, b): (v if (a + b) % 2 == 0 else -v)
                                        for (a, b), v in self.terms.items()})

    def conj(self) -> "WeylElement":
        return WeylElement._from_clean({k: v.conj() for k, v in self.terms.items()})

    def canonical(self) -> "WeylElement":
        """Scalar-normalized representative.  Only the scalar content is
        removed: a common polynomial factor is kept, since left multiplication
        by a polynomial changes the distributional solutions."""
        if self.is_zero():
            raise ValueError("zero operator has no canonical form")
        return DiffOperator.from_polys(canonicalize_polys(self.coefficient_polys())).to_weyl()

    def equals_up_to_scalar(self, other) -> bool:
        if isinstance(other, DiffOperator):
            return self.to_diff_operator().equals_up_to_scalar(other)
        return self.canonical() == WeylElement._coerce(other).canonical()

    def is_real(self) -> bool:
        return all(v.is_real() for v in self.terms.values())

    def __eq__(self, other):
        o = WeylElement._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"WeylElement({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        from .serialize import operator_to_text
        return operator_to_text(self.to_diff_operator())


def fourier(w) -> WeylElement:
    """Fourier transform ``x -> i Dx, Dx -> i x`` of a polynomial operator."""
    if isinstance(w, DiffOperator):
        w = w.to_weyl()
    return w.fourier()


def inverse_fourier(w) -> WeylElement:
    if isinstance(w, DiffOperator):
        w = w.to_weyl()
    return w.inverse_fourier()


def weyl_mul(u: WeylElement, v: WeylElement) -> WeylElement:
    return u * v


def residual_eval(op, x, derivs: Sequence[complex]) -> complex:
    """Floating-point value of ``sum_k c_k(x) * derivs[k]``.

    Raises ``ZeroDivisionError`` if ``x`` is a pole of a coefficient.
    """
    if isinstance(op, WeylElement):
        op = op.to_diff_operator()
    if len(derivs) < op.order + 1:
        raise ValueError(f"need {op.order + 1} derivatives, got {len(derivs)}")
    acc = 0j
    for c, f in zip(op.coeffs, derivs):
        if not c.is_zero():
            acc += c.eval_complex(complex(x)) * complex(f)
    return acc
