"""Dense univariate polynomials, Laurent polynomials and rational functions
over the Gaussian rationals."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from math import comb
from typing import Iterable, Sequence

from .scalars import ONE, ZERO, GaussianRational, gq

NEG_INF = -math.inf
POS_INF = math.inf


def _strip(coeffs: Sequence[GaussianRational]) -> tuple:
    n = len(coeffs)
    while n and coeffs[n - 1].is_zero():
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Polynomial in one variable with ascending coefficient tuple.

    The zero polynomial has an empty coefficient tuple and degree ``-inf``.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip([gq(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _from_clean(cls, coeffs: tuple) -> "Polynomial":
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        if k < 0:
            raise ValueError("negative exponent in Polynomial.monomial")
        return cls([ZERO] * k + [gq(c)])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Polynomial":
        p = cls.constant(lead)
        for r in roots:
            p = p * cls((-gq(r), ONE))
        return p

    # -- basic queries ---------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def valuation(self):
        """Index of the lowest nonzero coefficient (``+inf`` for zero)."""
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        return POS_INF

    def is_monomial(self) -> bool:
        return bool(self.coeffs) and self.valuation() == len(self.coeffs) - 1

    @property
    def lead(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, k: int) -> GaussianRational:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __len__(self):
        return len(self.coeffs)

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction, GaussianRational, complex)):
            return Polynomial.constant(other)
        return None

    def __add__(self, other):
        o = Polynomial._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Polynomial._from_clean(_strip(out))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_clean(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = Polynomial._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = Polynomial._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> "Polynomial":
        c = gq(c)
        if c.is_zero():
            return ZERO_POLY
        return Polynomial._from_clean(tuple(c * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO_POLY
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca.is_zero():
                continue
            for j, cb in enumerate(b):
                if not cb.is_zero():
                    out[i + j] = out[i + j] + ca * cb
        return Polynomial._from_clean(_strip(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = ONE_POLY
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift_degree(self, k: int) -> "Polynomial":
        """Multiply by ``x**k`` (``k >= 0``) or divide exactly by ``x**-k``."""
        if k >= 0:
            return Polynomial._from_clean((ZERO,) * k + self.coeffs) if self.coeffs else self
        if self.valuation() < -k:
            raise ValueError("shift_degree: not divisible by the requested power of x")
        return Polynomial._from_clean(self.coeffs[-k:])

    def divmod(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return ZERO_POLY, self
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv = other.lead.inverse()
        quot = [ZERO] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            q = c * inv
            quot[k - db] = q
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    rem[k - db + j] = rem[k - db + j] - q * b
        return Polynomial._from_clean(_strip(quot)), Polynomial._from_clean(_strip(rem[:db]))

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("exact_div: nonzero remainder")
        return q

    def derivative(self, k: int = 1) -> "Polynomial":
        c = self.coeffs
        for _ in range(k):
            c = tuple(j * c[j] for j in range(1, len(c)))
        return Polynomial._from_clean(_strip(c))

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = self.lead
        if lead == ONE:
            return self
        return self.scale(lead.inverse())

    def conj(self) -> "Polynomial":
        return Polynomial._from_clean(tuple(c.conj() for c in self.coeffs))

    # -- evaluation ------------------------------------------------------
    def __call__(self, x):
        if isinstance(x, Polynomial):
            return self.compose(x)
        if isinstance(x, (float, complex)):
            return self.eval_complex(x)
        x = gq(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_complex(self, x) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x + complex(c)
        return acc

    def to_complex_array(self):
        return [complex(c) for c in self.coeffs]

    def compose(self, q: "Polynomial") -> "Polynomial":
        acc = ZERO_POLY
        for c in reversed(self.coeffs):
            acc = acc * q + Polynomial._from_clean((c,) if not c.is_zero() else ())
        return acc

    def shift(self, a) -> "Polynomial":
        """Taylor shift: the polynomial ``p(x + a)``."""
        a = gq(a)
        if a.is_zero():
            return self
        c = list(self.coeffs)
        n = len(c)
        # repeated synthetic division
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                c[j] = c[j] + a * c[j + 1]
        return Polynomial._from_clean(_strip(c))

    # -- comparison / display -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        o = Polynomial._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Polynomial", self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        from .text import format_terms
        return format_terms({k: c for k, c in enumerate(self.coeffs)})


ZERO_POLY = Polynomial._from_clean(())
ONE_POLY = Polynomial._from_clean((ONE,))
X_POLY = Polynomial._from_clean((ZERO, ONE))


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor; ``gcd(0, 0) = 0``."""
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    if p.is_constant() or q.is_constant():
        return ONE_POLY
    if p.is_monomial() or q.is_monomial():
        k = min(p.valuation(), q.valuation())
        return Polynomial.monomial(int(k))
    # strip the common power of x first; it is cheap and frequent here
    k = min(p.valuation(), q.valuation())
    if k:
        return poly_gcd(p.shift_degree(-int(k)), q.shift_degree(-int(k))).shift_degree(int(k))
    a, b = p.monic(), q.monic()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a


def poly_lcm(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return ZERO_POLY
    return (p * q.exact_div(poly_gcd(p, q))).monic()


def squarefree_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: monic squarefree factors with multiplicities."""
    if p.degree <= 0:
        return []
    f = p.monic()
    out = []
    a = poly_gcd(f, f.derivative())
    b = f.exact_div(a)
    c = f.derivative().exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = b.exact_div(g)
        c = d.exact_div(g)
        d = c - b.derivative()
        i += 1
    return out


def falling_factorial_poly(k: int, shift=0) -> Polynomial:
    """``[lam + shift]_k = (lam+shift)(lam+shift-1)...(lam+shift-k+1)`` as a
    polynomial in ``lam``."""
    p = ONE_POLY
    s = gq(shift)
    for j in range(k):
        p = p * Polynomial((s - j, ONE))
    return p


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentPolynomial:
    """``sum_k coeffs[k] * x**(mindeg + k)``; zero has no stored coefficients."""

    __slots__ = ("mindeg_offset", "coeffs")

    def __init__(self, mindeg: int, coeffs: Iterable):
        cs = [gq(c) for c in coeffs]
        lo = 0
        while lo < len(cs) and cs[lo].is_zero():
            lo += 1
        cs = list(_strip(cs[lo:]))
        self.mindeg_offset = mindeg + lo if cs else 0
        self.coeffs = tuple(cs)

    @classmethod
    def from_dict(cls, terms: dict) -> "LaurentPolynomial":
        terms = {k: gq(v) for k, v in terms.items() if not gq(v).is_zero()}
        if not terms:
            return cls(0, ())
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(k, ZERO) for k in range(lo, hi + 1)])

    def terms(self) -> dict:
        return {self.mindeg_offset + k: c for k, c in enumerate(self.coeffs) if not c.is_zero()}

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def mindeg(self):
        return self.mindeg_offset if self.coeffs else POS_INF

    @property
    def maxdeg(self):
        return self.mindeg_offset + len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def coefficient(self, k: int) -> GaussianRational:
        j = k - self.mindeg_offset
        if self.coeffs and 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return ZERO

    def initial_term(self) -> tuple[int, GaussianRational]:
        """``(mindeg, coefficient)`` of the lowest-order term."""
        if not self.coeffs:
            raise ValueError("zero Laurent polynomial has no initial term")
        return self.mindeg_offset, self.coeffs[0]

    def __add__(self, other):
        o = _as_laurent(other)
        if o is None:
            return NotImplemented
        t = self.terms()
        for k, c in o.terms().items():
            t[k] = t.get(k, ZERO) + c
        return LaurentPolynomial.from_dict(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.mindeg_offset, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = _as_laurent(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_laurent(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _as_laurent(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return LaurentPolynomial(0, ())
        p = Polynomial._from_clean(self.coeffs) * Polynomial._from_clean(o.coeffs)
        return LaurentPolynomial(self.mindeg_offset + o.mindeg_offset, p.coeffs)

    __rmul__ = __mul__

    def derivative(self) -> "LaurentPolynomial":
        return LaurentPolynomial.from_dict({k - 1: k * c for k, c in self.terms().items() if k})

    def __eq__(self, other):
        o = _as_laurent(other)
        if o is None:
            return NotImplemented
        return self.terms() == o.terms()

    def __hash__(self):
        return hash(("Laurent", self.mindeg_offset, self.coeffs))

    def to_rational_function(self) -> "RationalFunction":
        if self.is_zero():
            return RF_ZERO
        k = self.mindeg_offset
        p = Polynomial._from_clean(self.coeffs)
        if k >= 0:
            return RationalFunction._from_clean(p.shift_degree(k), ONE_POLY)
        return RationalFunction._from_clean(p, Polynomial.monomial(-k))

    def __call__(self, x):
        return self.to_rational_function()(x)

    def __repr__(self):
        return f"LaurentPolynomial({self})"

    def __str__(self):
        from .text import format_terms
        return format_terms(self.terms())


def _as_laurent(v):
    if isinstance(v, LaurentPolynomial):
        return v
    if isinstance(v, (int, Fraction, GaussianRational)):
        return LaurentPolynomial(0, (v,))
    if isinstance(v, Polynomial):
        return LaurentPolynomial(0, v.coeffs)
    if isinstance(v, RationalFunction):
        return v.as_laurent()
    return None


def laurent_bounds(p) -> tuple:
    """``(mindeg, maxdeg)`` of a Laurent polynomial; ``(+inf, -inf)`` for zero."""
    lp = _as_laurent(p)
    if lp is None:
        raise TypeError("laurent_bounds needs a Laurent polynomial")
    return lp.mindeg, lp.maxdeg


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------

class RationalFunction:
    """``num/den`` with coprime numerator and monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = ONE_POLY if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        n, d = _normalize_fraction(num, den)
        self.num, self.den = n, d
        self._hash = None

    @classmethod
    def _from_clean(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        r = object.__new__(cls)
        r.num, r.den = num, den
        r._hash = None
        return r

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls._from_clean(X_POLY, ONE_POLY)

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls._from_clean(Polynomial.constant(c), ONE_POLY)

    @classmethod
    def laurent(cls, terms: dict) -> "RationalFunction":
        """Build from ``{exponent: coefficient}`` allowing negative exponents."""
        return LaurentPolynomial.from_dict(terms).to_rational_function()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def is_laurent(self) -> bool:
        return self.den.is_monomial()

    def as_laurent(self):
        """Laurent polynomial view, or ``None`` if the denominator is not ``x**k``."""
        if not self.den.is_monomial():
            return None
        return LaurentPolynomial(-self.den.degree, self.num.coeffs)

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(v):
        if isinstance(v, RationalFunction):
            return v
        if isinstance(v, (int, Fraction, GaussianRational)):
            return RationalFunction._from_clean(Polynomial.constant(v), ONE_POLY)
        if isinstance(v, Polynomial):
            return RationalFunction._from_clean(v, ONE_POLY)
        if isinstance(v, LaurentPolynomial):
            return v.to_rational_function()
        return None

    def __add__(self, other):
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        d1, d2 = self.den, o.den
        if d1 == d2:
            return RationalFunction(self.num + o.num, d1)
        if d1.is_monomial() and d2.is_monomial():
            k = max(d1.degree, d2.degree)
            num = self.num.shift_degree(k - d1.degree) + o.num.shift_degree(k - d2.degree)
            return RationalFunction(num, Polynomial.monomial(k))
        g = poly_gcd(d1, d2)
        c1 = d2.exact_div(g)
        c2 = d1.exact_div(g)
        return RationalFunction(self.num * c1 + o.num * c2, d1 * c1)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._from_clean(-self.num, self.den)

    def __sub__(self, other):
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = gq(other)
            if c.is_zero():
                return RF_ZERO
            return RationalFunction._from_clean(self.num.scale(c), self.den)
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RF_ZERO
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1, d2 = self.num.exact_div(g1), o.den.exact_div(g1)
        n2, d1 = o.num.exact_div(g2), self.den.exact_div(g2)
        num = n1 * n2
        den = d1 * d2
        lead = den.lead
        if lead != ONE:
            inv = lead.inverse()
            num, den = num.scale(inv), den.scale(inv)
        return RationalFunction._from_clean(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("rational function division by zero")
        lead = self.num.lead
        inv = lead.inverse()
        return RationalFunction._from_clean(self.den.scale(inv), self.num.scale(inv))

    def __truediv__(self, other):
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction._from_clean(self.num ** k, self.den ** k)

    def derivative(self) -> "RationalFunction":
        n, d = self.num, self.den
        if d.degree == 0:
            return RationalFunction._from_clean(n.derivative(), ONE_POLY)
        if d.is_monomial():
            k = d.degree
            # (n / x^k)' = (x n' - k n) / x^(k+1)
            num = n.derivative().shift_degree(1) - n.scale(k)
            return RationalFunction(num, Polynomial.monomial(k + 1))
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def conj(self) -> "RationalFunction":
        return RationalFunction._from_clean(self.num.conj(), self.den.conj())

    def shift(self, a) -> "RationalFunction":
        """The rational function ``r(x + a)``."""
        return RationalFunction(self.num.shift(a), self.den.shift(a))

    # -- evaluation ------------------------------------------------------
    def __call__(self, x):
        if isinstance(x, (float, complex)):
            return self.eval_complex(x)
        d = self.den(x)
        if d.is_zero():
            raise ZeroDivisionError(f"pole of {self} at {x}")
        return self.num(x) / d

    def eval_complex(self, x) -> complex:
        d = self.den.eval_complex(x)
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at {x}")
        return self.num.eval_complex(x) / d

    # -- comparison / display -------------------------------------------
    def __eq__(self, other):
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("RF", self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        from .text import format_rational_function
        return format_rational_function(self)


def _as_poly(v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, (int, Fraction, GaussianRational)):
        return Polynomial.constant(v)
    if isinstance(v, (list, tuple)):
        return Polynomial(v)
    raise TypeError(f"cannot convert {type(v).__name__} to Polynomial")


def _normalize_fraction(num: Polynomial, den: Polynomial):
    if num.is_zero():
        return ZERO_POLY, ONE_POLY
    if den.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
    lead = den.lead
    if lead != ONE:
        inv = lead.inverse()
        num, den = num.scale(inv), den.scale(inv)
    return num, den


RF_ZERO = RationalFunction._from_clean(ZERO_POLY, ONE_POLY)
RF_ONE = RationalFunction._from_clean(ONE_POLY, ONE_POLY)


def common_denominator(rfs: Iterable[RationalFunction]) -> Polynomial:
    """Monic lcm of the denominators."""
    return reduce(poly_lcm, (r.den for r in rfs), ONE_POLY)


def clear_denominators(rfs: Sequence[RationalFunction]) -> list[Polynomial]:
    """Multiply by the common denominator and divide out the polynomial gcd
    of the resulting numerators.  The scalar content is left alone."""
    L = common_denominator(rfs)
    polys = [(r.num * L.exact_div(r.den)) if not r.is_zero() else ZERO_POLY for r in rfs]
    g = ZERO_POLY
    for p in polys:
        g = poly_gcd(g, p)
        if g.degree == 0:
            break
    if g.degree > 0:
        polys = [p.exact_div(g) for p in polys]
    return polys


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)
