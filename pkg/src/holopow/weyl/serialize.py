"""JSON and plain-text forms of differential operators.

JSON::

    {"order": r, "coeffs": [[[re_num, re_den, im_num, im_den], ...], ...]}

with the outer list indexed by the power of ``Dx`` and the inner list by the
ascending power of ``x``.  Only polynomial coefficients are representable.

Text::

    (x^4)*Dx^4 + (6*x^3)*Dx^3 + ... + (9 + 6*x^2 + 9*x^4)

highest derivative first; coefficients use the algebra text grammar and may
be rational functions.
"""
from __future__ import annotations

import json

from ..algebra import (
    ParseError,
    Polynomial,
    RationalFunction,
    format_rational_function,
    scalar_from_json,
    scalar_to_json,
)
from ..algebra.text import _Parser, tokenize
from .operators import DiffOperator, WeylElement


def operator_to_json(op, indent=None) -> str:
    return json.dumps(operator_to_dict(op), indent=indent)


def operator_to_dict(op) -> dict:
    if isinstance(op, WeylElement):
        op = op.to_diff_operator()
    if not op.is_polynomial():
        raise ValueError("JSON operator format needs polynomial coefficients")
    return {
        "order": op.order,
        "coeffs": [[scalar_to_json(c) for c in rf.num.coeffs] for rf in op.coeffs],
    }


def operator_from_dict(obj: dict) -> DiffOperator:
    try:
        polys = [Polynomial([scalar_from_json(item) for item in row]) for row in obj["coeffs"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed operator JSON: {exc}") from exc
    op = DiffOperator.from_polys(polys)
    if "order" in obj and obj["order"] != op.order and not op.is_zero():
        raise ValueError(f"declared order {obj['order']} but coefficients give {op.order}")
    return op


def operator_from_json(text: str) -> DiffOperator:
    return operator_from_dict(json.loads(text))


def operator_to_text(op, var: str = "x", dvar: str = "Dx") -> str:
    if isinstance(op, WeylElement):
        op = op.to_diff_operator()
    parts = []
    for k in range(op.order, -1, -1):
        c = op.coeffs[k]
        if c.is_zero():
            continue
        body = f"({format_rational_function(c, var)})"
        if k == 1:
            body += f"*{dvar}"
        elif k > 1:
            body += f"*{dvar}^{k}"
        parts.append(body)
    return " + ".join(parts) if parts else "0"


def operator_from_text(text: str, var: str = "x", dvar: str = "Dx") -> DiffOperator:
    """Parse ``(c_r)*Dx^r + ... + (c_0)``.  Bare ``Dx^k`` terms and leading
    signs on a term are accepted too."""
    toks = tokenize(text)
    p = _Parser(toks, var, extra_symbols={dvar})
    coeffs: dict[int, RationalFunction] = {}
    first = True
    while not p.at_end():
        sign = 1
        kind, val = p.peek()
        if kind == "op" and val in "+-":
            p.take()
            sign = -1 if val == "-" else 1
        elif not first:
            raise ParseError(f"expected + or - between operator terms, got {val!r}")
        first = False
        kind, val = p.peek()
        if kind == "id" and val == dvar:
            coeff = RationalFunction.constant(1)
        else:
            coeff = p.term()
        order = 0
        kind, val = p.peek()
        if kind == "op" and val == "*":
            p.take()
            p.expect("id", dvar)
            order = _dx_power(p)
        elif kind == "id" and val == dvar:
            p.take()
            order = _dx_power(p)
        if sign < 0:
            coeff = -coeff
        coeffs[order] = coeffs.get(order, RationalFunction.constant(0)) + coeff
    if not coeffs:
        raise ParseError("empty operator")
    return DiffOperator([coeffs.get(k, RationalFunction.constant(0)) for k in range(max(coeffs) + 1)])


def _dx_power(p) -> int:
    kind, val = p.peek()
    if kind == "op" and val == "^":
        p.take()
        e = p.exponent()
        if e < 0:
            raise ParseError("negative power of the derivative")
        return e
    return 1
