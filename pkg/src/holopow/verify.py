"""Reference checks: every transcribed fixture and printed claim, re-derived."""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebra import gq
from .power import build_Q, degree_bound, kernel_vector, power_operator, seed_bounds
from .stats import (
    BetaParams,
    beta_char_seed,
    beta_density_ode,
    cube_char_operator,
    cube_char_seed,
    cube_density_ode,
    irwin_hall_density,
    reference_fixture,
    uniform_density_operator,
)
from .weyl import fourier_exponents, indicial


@dataclass
class CheckResult:
    name: str
    passed: bool
    elapsed: float
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed,
                "elapsed": round(self.elapsed, 6), "detail": self.detail}


def _ex_qx():
    ex = reference_fixture("ex_qx")
    Q = build_Q(ex.seed, ex.n)
    for i, row in enumerate(ex.Q):
        for j, e in enumerate(row):
            if Q[i, j] != e:
                return False, f"Q[{i}][{j}] = {Q[i, j]}, expected {e}"
    if kernel_vector(Q) != ex.kernel:
        return False, "kernel mismatch"
    if not power_operator(ex.seed, ex.n).operator.equals_up_to_scalar(ex.operator):
        return False, "operator mismatch"
    return True, "Q rows, kernel and operator exact"


F3_PARAMS = ((1, 1), (2, 3), (Fraction(1, 2), Fraction(5, 2)), (3, 3))


def _f3():
    f3 = reference_fixture("f3")
    for a, b in F3_PARAMS:
        op = beta_density_ode(BetaParams(a, b, 3)).operator
        if not op.equals_up_to_scalar(f3.at(a, b)):
            return False, f"mismatch at a={a}, b={b}"
    return True, f"{len(F3_PARAMS)} parameter pairs"


def _f4():
    ok = cube_density_ode(4).operator.equals_up_to_scalar(reference_fixture("f4"))
    return ok, "order-12 operator" if ok else "mismatch"


def _uniform():
    for n in range(1, 7):
        if not beta_density_ode(BetaParams(1, 1, n)).operator.equals_up_to_scalar(uniform_density_operator(n)):
            return False, f"n={n}"
    return True, "x(x-1)...(x-n) Dx^n for n <= 6"


def _beta_bounds():
    s = beta_char_seed(2, 3)
    ok = seed_bounds(s) == (-1, -1, -1, 0) and all(degree_bound(s, n) == n for n in range(1, 9))
    return ok, "m0=M0=-1, m1=-1, M1=0; bound n"


def _cube_bounds():
    s = cube_char_seed()
    ok = seed_bounds(s) == (-2, -2, -3, -1) and all(degree_bound(s, n) == 3 * n for n in range(1, 9))
    return ok, "m0=M0=-2, m1=-3, M1=-1; bound 3n"


def _beta_exponents():
    for a, b in ((1, 1), (2, 3), (Fraction(1, 2), Fraction(7, 3))):
        res = indicial(beta_char_seed(a, b).operator(), 0)
        want = sorted([gq(0), gq(1 - Fraction(a) - Fraction(b))], key=lambda z: z.re)
        if not res.regular or res.sorted_exponents() != want:
            return False, f"a={a}, b={b}"
    return True, "exponents 0, 1-(a+b) at t=0"


def _cube_seed():
    res = indicial(cube_char_operator(), "inf")
    ok = res.regular and res.sorted_exponents() == [gq(Fraction(-5, 3)), gq(Fraction(-1, 3))]
    return ok, "exponents -1/3, -5/3 at infinity"


def _orders():
    for n in range(1, 6):
        if beta_density_ode(BetaParams(2, 3, n)).order != n:
            return False, f"beta n={n}"
        if cube_density_ode(n).order != 3 * n:
            return False, f"cube n={n}"
    return True, "beta order n, cube order 3n for n <= 5"


def _ladder():
    for n in range(1, 6):
        pw = power_operator(cube_char_seed(), n)
        res = indicial(pw.operator, "inf")
        want = sorted((gq(Fraction(-(n + 4 * k), 3)) for k in range(n + 1)), key=lambda z: z.re)
        if not res.regular or sorted(res.exponents_exact, key=lambda z: z.re) != want:
            return False, f"infinity, n={n}"
        polys = pw.operator.cleared()
        mapped = fourier_exponents(res.exponents_exact, polys[-1].degree, pw.order, "inf->0")
        dens = cube_density_ode(n).operator
        at0 = indicial(dens, 0)
        key = lambda z: (z.re, z.im)  # noqa: E731
        if not at0.regular or sorted(at0.exponents_exact, key=key) != sorted(mapped, key=key):
            return False, f"origin, n={n}"
    return True, "n <= 5"


def _irwin_hall():
    for n in range(1, 9):
        d = irwin_hall_density(n)
        if sum(c * Fraction(n - j) ** n / n for j, c in enumerate(d.c)) != 1:
            return False, f"n={n}"
    return True, "sum c_j (n-j)^n / n = 1 for n <= 8"


CHECKS: dict[str, Callable] = {
    "ex_qx": _ex_qx,
    "f3": _f3,
    "f4": _f4,
    "uniform": _uniform,
    "beta-bounds": _beta_bounds,
    "cube-bounds": _cube_bounds,
    "beta-exponents": _beta_exponents,
    "cube-seed-exponents": _cube_seed,
    "orders": _orders,
    "exponent-ladder": _ladder,
    "irwin-hall": _irwin_hall,
}


def run_checks(only: list[str] | None = None) -> list[CheckResult]:
    names = list(CHECKS) if not only else only
    out = []
    for name in names:
        if name not in CHECKS:
            raise KeyError(f"unknown check {name!r}; available: {', '.join(CHECKS)}")
        start = time.perf_counter()
        try:
            ok, detail = CHECKS[name]()
        except Exception as exc:  # a crash counts as a failure, not an abort
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, bool(ok), time.perf_counter() - start, detail))
    return out
