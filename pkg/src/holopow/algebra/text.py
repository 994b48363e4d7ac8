"""Plain-text rendering and parsing of polynomials and rational functions.

Terms are written with nonnegative powers ascending first and negative powers
after them by increasing ``|k|``, e.g. ``9 + 6*x^-2 + 9*x^-4``.  Scalars use
``p/q`` and ``(p/q + r/s*i)``; ``i`` is a reserved literal.

The parser accepts the rendered form and ordinary infix input such as
``(x^2 - 1)/(x + 1)`` or ``i - 2*t^-1``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .scalars import I, GaussianRational, format_scalar, gq


class ParseError(ValueError):
    """Malformed polynomial / rational-function text."""


def _term_order(k: int):
    return (k < 0, abs(k))


def _is_negative(c: GaussianRational) -> bool:
    if c.is_real():
        return c.re < 0
    return c.re == 0 and c.im < 0


def _monomial(k: int, var: str) -> str:
    if k == 1:
        return var
    return f"{var}^{k}"


def format_terms(terms: dict, var: str = "x") -> str:
    """Render ``{exponent: GaussianRational}`` in canonical order."""
    items = [(k, c) for k, c in terms.items() if not c.is_zero()]
    if not items:
        return "0"
    items.sort(key=lambda kc: _term_order(kc[0]))
    out = []
    for idx, (k, c) in enumerate(items):
        neg = _is_negative(c)
        mag = -c if neg else c
        if k == 0:
            body = format_scalar(mag)
        elif mag == 1:
            body = _monomial(k, var)
        else:
            body = f"{format_scalar(mag)}*{_monomial(k, var)}"
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def format_polynomial(p, var: str = "x") -> str:
    return format_terms(dict(enumerate(p.coeffs)), var)


def format_rational_function(r, var: str = "x") -> str:
    if r.den.degree == 0:
        return format_polynomial(r.num, var)
    if r.den.is_monomial():
        k = r.den.degree
        return format_terms({j - k: c for j, c in enumerate(r.num.coeffs)}, var)
    return f"({format_polynomial(r.num, var)})/({format_polynomial(r.den, var)})"


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def tokenize(text: str) -> list[tuple[str, str]]:
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} at {pos} in {text!r}")
        num, ident, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif ident is not None:
            out.append(("id", ident))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, tokens, var: str, extra_symbols=()):
        self.toks = tokens
        self.pos = 0
        self.var = var
        self.extra = set(extra_symbols)

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, kind, value=None):
        k, v = self.take()
        if k != kind or (value is not None and v != value):
            raise ParseError(f"expected {value or kind}, got {v!r}")
        return v

    def at_end(self) -> bool:
        return self.pos >= len(self.toks)

    def expr(self):
        val = self.term()
        while True:
            k, v = self.peek()
            if k == "op" and v in "+-":
                self.take()
                rhs = self.term()
                val = val + rhs if v == "+" else val - rhs
            else:
                return val

    def _starts_factor(self) -> bool:
        k, v = self.peek()
        if k == "num":
            return True
        if k == "id":
            return v not in self.extra
        return k == "op" and v == "("

    def term(self):
        val = self.unary()
        while True:
            k, v = self.peek()
            if k == "op" and v in "*/":
                # leave "*Dx" style suffixes to the caller
                if v == "*" and self.pos + 1 < len(self.toks) and self.toks[self.pos + 1][0] == "id" \
                        and self.toks[self.pos + 1][1] in self.extra:
                    return val
                self.take()
                rhs = self.unary()
                if v == "*":
                    val = val * rhs
                else:
                    if rhs.is_zero():
                        raise ParseError("division by zero")
                    val = val / rhs
            elif self._starts_factor():
                val = val * self.power()
            else:
                return val

    def unary(self):
        k, v = self.peek()
        if k == "op" and v in "+-":
            self.take()
            inner = self.unary()
            return inner if v == "+" else -inner
        return self.power()

    def exponent(self) -> int:
        k, v = self.peek()
        sign = 1
        if k == "op" and v == "(":
            self.take()
            e = self.exponent()
            self.expect("op", ")")
            return e
        if k == "op" and v in "+-":
            self.take()
            sign = -1 if v == "-" else 1
        return sign * int(self.expect("num"))

    def power(self):
        base = self.atom()
        k, v = self.peek()
        if k == "op" and v == "^":
            self.take()
            e = self.exponent()
            if e < 0 and base.is_zero():
                raise ParseError("zero to a negative power")
            return base ** e
        return base

    def atom(self):
        from .poly import RationalFunction
        k, v = self.take()
        if k == "num":
            return RationalFunction.constant(int(v))
        if k == "id":
            if v == "i":
                return RationalFunction.constant(I)
            if v == self.var:
                return RationalFunction.x()
            raise ParseError(f"unknown symbol {v!r} (variable is {self.var!r})")
        if k == "op" and v == "(":
            val = self.expr()
            self.expect("op", ")")
            return val
        if v is None:
            raise ParseError("unexpected end of input")
        raise ParseError(f"unexpected token {v!r}")


def parse_rational_function(text: str, var: str = "x"):
    """Parse infix text into an exact :class:`RationalFunction`."""
    p = _Parser(tokenize(text), var)
    if p.at_end():
        raise ParseError("empty expression")
    val = p.expr()
    if not p.at_end():
        raise ParseError(f"trailing input at token {p.peek()[1]!r}")
    return val


def parse_polynomial(text: str, var: str = "x"):
    r = parse_rational_function(text, var)
    if not r.is_polynomial():
        raise ParseError(f"{text!r} is not a polynomial")
    return r.num


def parse_laurent(text: str, var: str = "x"):
    r = parse_rational_function(text, var)
    lp = r.as_laurent()
    if lp is None:
        raise ParseError(f"{text!r} is not a Laurent polynomial")
    return lp


def parse_scalar(text: str) -> GaussianRational:
    r = parse_rational_function(text, var="__none__")
    return r.num[0] if not r.is_zero() else gq(0)


def scalar_from_json(item) -> GaussianRational:
    re_num, re_den, im_num, im_den = item
    return GaussianRational(Fraction(re_num, re_den), Fraction(im_num, im_den))


def scalar_to_json(z: GaussianRational) -> list[int]:
    re, im = z.re, z.im
    return [re.numerator, re.denominator, im.numerator, im.denominator]
