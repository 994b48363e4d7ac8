"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals.

A :class:`GaussianRational` is stored as ``(a + b*i) / d`` with integers
``a, b`` and ``d > 0`` sharing no common factor.  This keeps every field
operation down to a handful of integer multiplications and one gcd.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC

Rational = Fraction


def _norm3(a: int, b: int, d: int) -> tuple[int, int, int]:
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(a, b, d)
    if g > 1:
        return a // g, b // g, d // g
    return a, b, d


class GaussianRational:
    """Complex number with rational real and imaginary parts.

    >>> z = GaussianRational(Fraction(1, 2), 3)
    >>> z * z.conj() == z.norm()
    True
    >>> str(GaussianRational(0, 1))
    'i'
    """

    __slots__ = ("_a", "_b", "_d", "_hash")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        self._a, self._b, self._d = _norm3(a, b, d)
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        z = object.__new__(cls)
        z._a, z._b, z._d = _norm3(a, b, d)
        z._hash = None
        return z

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, int):
            return cls._raw(value, 0, 1)
        if isinstance(value, _RationalABC):
            return cls._raw(value.numerator, 0, value.denominator)
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        if isinstance(value, (float, str)):
            return cls(Fraction(value))
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    # -- accessors -------------------------------------------------------
    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def parts(self) -> tuple[int, int, int]:
        """Integer triple ``(a, b, d)`` with ``self == (a + b*i)/d``."""
        return self._a, self._b, self._d

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_real(self) -> bool:
        return self._b == 0

    def conj(self) -> "GaussianRational":
        return GaussianRational._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """``|z|**2`` as an exact rational."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def __complex__(self) -> complex:
        return complex(self._a / self._d, self._b / self._d)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if self._d == o._d:
            return GaussianRational._raw(self._a + o._a, self._b + o._b, self._d)
        return GaussianRational._raw(self._a * o._d + o._a * self._d,
                                     self._b * o._d + o._b * self._d,
                                     self._d * o._d)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        a1, b1, d1 = self._a, self._b, self._d
        a2, b2, d2 = o._a, o._b, o._d
        if b1 == 0 and b2 == 0:
            return GaussianRational._raw(a1 * a2, 0, d1 * d2)
        return GaussianRational._raw(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self._a * self._a + self._b * self._b
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        # 1/((a+bi)/d) = d(a-bi)/(a^2+b^2)
        return GaussianRational._raw(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        try:
            o = GaussianRational.coerce(other)
        except (TypeError, ValueError, OverflowError):
            return NotImplemented
        return self == o

    def __hash__(self):
        if self._hash is None:
            if self._b == 0:
                self._hash = hash(Fraction(self._a, self._d))
            else:
                self._hash = hash((self._a, self._b, self._d))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        return format_scalar(self)


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _imag_str(q: Fraction) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return f"{_frac_str(q)}*i"


def format_scalar(z: GaussianRational) -> str:
    """Canonical text: ``p/q`` when real, otherwise ``(p/q + r/s*i)``."""
    re, im = z.re, z.im
    if im == 0:
        return _frac_str(re)
    if re == 0:
        return _imag_str(im)
    sign = "+" if im > 0 else "-"
    return f"({_frac_str(re)} {sign} {_imag_str(abs(im))})"


ZERO = GaussianRational._raw(0, 0, 1)
ONE = GaussianRational._raw(1, 0, 1)
I = GaussianRational._raw(0, 1, 1)


def gq(value) -> GaussianRational:
    """Shorthand coercion to :class:`GaussianRational`."""
    return GaussianRational.coerce(value)


# -- Gaussian integers ----------------------------------------------------

def _gi_divmod(a: tuple[int, int], b: tuple[int, int]):
    """Euclidean division in Z[i] with nearest-integer quotient."""
    ar, ai = a
    br, bi = b
    n = br * br + bi * bi
    # a * conj(b)
    pr = ar * br + ai * bi
    pi = ai * br - ar * bi
    qr = (2 * pr + n) // (2 * n)
    qi = (2 * pi + n) // (2 * n)
    rr = ar - (qr * br - qi * bi)
    ri = ai - (qr * bi + qi * br)
    return (qr, qi), (rr, ri)


def gaussian_int_gcd(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    while b != (0, 0):
        _, r = _gi_divmod(a, b)
        a, b = b, r
    return a


def unit_normalizer(z: GaussianRational) -> GaussianRational:
    """The unique unit ``u`` in {1, -1, i, -i} with ``u*z`` in the sector
    ``re > 0, im >= 0``.  Real positive ``z`` gets ``u = 1``."""
    a, b = z._a, z._b
    if a > 0 and b >= 0:
        return ONE
    if a <= 0 and b > 0:
        return -I  # (a+bi)(-i) = b - ai
    if a < 0 and b <= 0:
        return -ONE
    if a >= 0 and b < 0:
        return I
    raise ZeroDivisionError("zero has no unit normalizer")
