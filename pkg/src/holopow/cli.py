"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (JSON error record on stderr
with ``--json``), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from .algebra import (
    ParseError,
    format_polynomial,
    format_scalar,
    parse_rational_function,
    scalar_to_json,
)
from .errors import HolopowError
from .power import SecondOrderSeed, degree_bound, power_operator, seed_bounds
from .stats import BetaParams, beta_density_ode, cube_density_ode, irwin_hall_density
from .weyl import (
    fourier_exponents,
    indicial,
    operator_from_text,
    operator_to_dict,
    operator_to_text,
)


class UsageError(Exception):
    pass


def _seed(args) -> SecondOrderSeed:
    return SecondOrderSeed(a0=parse_rational_function(args.a0), a1=parse_rational_function(args.a1))


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _grid(text: str) -> np.ndarray:
    try:
        a, b, step = (float(v) for v in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError("grid must be a:b:step") from None
    if step <= 0 or b < a:
        raise argparse.ArgumentTypeError("grid needs a <= b and step > 0")
    count = int(round((b - a) / step)) + 1
    return a + step * np.arange(count)


def _emit(args, text: str, obj) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def cmd_power_ode(args):
    seed = _seed(args)
    pw = power_operator(seed, args.n)
    obj = operator_to_dict(pw.operator)
    obj["n"] = args.n
    _emit(args, operator_to_text(pw.operator), obj)


def cmd_fourier(args):
    op = operator_from_text(args.op).to_weyl()
    out = op.inverse_fourier() if args.inverse else op.fourier()
    if args.canonical:
        out = out.canonical()
    _emit(args, operator_to_text(out), operator_to_dict(out))


def _exps_json(values):
    return None if values is None else [scalar_to_json(v) for v in values]


def cmd_exponents(args):
    op = operator_from_text(args.op)
    point = args.point
    res = indicial(op, "inf" if point.lower() in ("inf", "oo", "infinity") else Fraction(point))
    obj = {"point": "inf" if res.point == float("inf") else format_scalar(res.point),
           "regular": res.regular, "order": res.order}
    lines = [f"point: {obj['point']}", f"regular: {str(res.regular).lower()}"]
    if res.regular:
        obj["indicial"] = format_polynomial(res.poly, "lam")
        obj["exponents"] = _exps_json(res.exponents_exact)
        obj["exponents_numeric"] = [[z.real, z.imag] for z in res.exponents_numeric]
        lines.append(f"indicial: {obj['indicial']}")
        if res.exponents_exact is not None:
            lines.append("exponents: " + ", ".join(format_scalar(z) for z in res.exponents_exact))
        else:
            lines.append("exponents (numeric): " + ", ".join(f"{z:.12g}" for z in res.exponents_numeric))
        if args.map and res.exponents_exact is not None:
            w = op.to_weyl() if op.is_polynomial() else None
            if w is None:
                raise UsageError("--map needs polynomial coefficients")
            d = w.coefficient_polys()[-1].degree
            mapped = fourier_exponents(res.exponents_exact, d, w.order, args.map)
            obj["fourier_exponents"] = _exps_json(mapped)
            lines.append("fourier exponents: " + ", ".join(format_scalar(z) for z in mapped))
    _emit(args, "\n".join(lines), obj)


def cmd_degree_bound(args):
    seed = _seed(args)
    bound = degree_bound(seed, args.n)
    m0, M0, m1, M1 = seed_bounds(seed)
    obj = {"n": args.n, "bound": bound, "m0": _inf(m0), "M0": _inf(M0), "m1": _inf(m1), "M1": _inf(M1)}
    if args.check:
        obj["max_degree"] = power_operator(seed, args.n).max_degree()
    text = str(bound) if not args.check else f"{bound} (attained max degree {obj['max_degree']})"
    _emit(args, text, obj)


def _inf(v):
    return v if isinstance(v, int) else str(v)


def cmd_beta_ode(args):
    d = beta_density_ode(BetaParams(args.a, args.b, args.n))
    _emit(args, operator_to_text(d.operator), d.to_dict())


def cmd_irwin_hall(args):
    d = irwin_hall_density(args.n)
    lines = ["c = " + ", ".join(str(c) for c in d.c)]
    for k, p in enumerate(d.pieces):
        lines.append(f"[{k}, {k + 1}]: {p}")
    _emit(args, "\n".join(lines), d.to_dict())


def cmd_cube_ode(args):
    d = cube_density_ode(args.n)
    _emit(args, operator_to_text(d.operator), d.to_dict())


def cmd_cube_density(args):
    from .numeric import (
        InitialValueJob,
        density_to_csv,
        density_to_json,
        initial_values,
        ivp_solve,
        monte_carlo_density,
    )

    xs = args.grid if args.grid is not None else _grid("0.5:4:0.25")
    dens = cube_density_ode(args.n)
    iv = initial_values(InitialValueJob(n=args.n, x0=args.x0, T=args.T, m=args.m))
    rtol = 1e-10
    sol = ivp_solve(dens, args.x0, iv, xs, rtol=rtol)
    f = sol.f.real
    # largest accepted local error estimate, converted out of tolerance units
    extra = np.full(len(xs), sol.stats.max_error_estimate * rtol)
    meta = {"n": args.n, "x0": args.x0, "T": args.T, "steps": sol.stats.steps,
            "rejected": sol.stats.rejected}
    if args.mc_check:
        mc = monte_carlo_density(args.n, xs, samples=args.mc_check, seed=args.seed)
        meta["mc_sup_diff"] = float(np.max(np.abs(f - mc.density)))
        extra = mc.stderr
    if args.format == "csv":
        sys.stdout.write(density_to_csv(xs, f, extra))
    elif args.format == "json" or args.json:
        print(density_to_json(xs, f, extra, meta))
    else:
        for x, v in zip(xs, f):
            print(f"{x:.6g} {v:.12g}")
        if args.mc_check:
            print(f"# Monte Carlo sup difference: {meta['mc_sup_diff']:.3g}")


def cmd_verify(args):
    from .verify import run_checks

    only = args.only.split(",") if args.only else None
    results = run_checks(only)
    if args.json:
        for r in results:
            print(json.dumps(r.to_dict(), sort_keys=True))
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            status = "pass" if r.passed else "FAIL"
            print(f"{r.name:<{width}}  {status}  {r.elapsed:8.3f}s  {r.detail}")
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="holopow", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = add("power-ode", cmd_power_ode, "annihilator of f^n for f'' = a1 f' + a0 f")
    sp.add_argument("--a0", required=True)
    sp.add_argument("--a1", required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = add("fourier", cmd_fourier, "Fourier image of a polynomial-coefficient operator")
    sp.add_argument("--op", required=True, help="e.g. '(x^2)*Dx^2 + (x)*Dx + (1)'")
    sp.add_argument("--inverse", action="store_true")
    sp.add_argument("--canonical", action="store_true")

    sp = add("exponents", cmd_exponents, "indicial polynomial and exponents at a point")
    sp.add_argument("--op", required=True)
    sp.add_argument("--point", default="0", help="rational point or 'inf'")
    sp.add_argument("--map", choices=["0->inf", "inf->0"], help="also map exponents across the Fourier transform")

    sp = add("degree-bound", cmd_degree_bound, "coefficient-degree bound for Laurent seeds")
    sp.add_argument("--a0", required=True)
    sp.add_argument("--a1", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--check", action="store_true", help="also build the operator and report its degree")

    sp = add("beta-ode", cmd_beta_ode, "density operator for a sum of n Beta(a, b)")
    sp.add_argument("--a", type=_rational, required=True)
    sp.add_argument("--b", type=_rational, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = add("irwin-hall", cmd_irwin_hall, "exact density of a sum of n uniforms")
    sp.add_argument("--n", type=int, required=True)

    sp = add("cube-ode", cmd_cube_ode, "density operator for a sum of n cubed normals")
    sp.add_argument("--n", type=int, required=True)

    sp = add("cube-density", cmd_cube_density, "numeric density of a sum of n cubed normals")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--x0", type=float, default=1.0)
    sp.add_argument("--grid", type=_grid, default=None, help="a:b:step (default 0.5:4:0.25)")
    sp.add_argument("--T", type=float, default=10.0)
    sp.add_argument("--m", type=int, default=6)
    sp.add_argument("--mc-check", type=int, default=0, metavar="SAMPLES")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=["text", "csv", "json"], default="text")

    sp = add("verify-paper", cmd_verify, "re-derive every transcribed reference object")
    sp.add_argument("--only", default=None, help="comma-separated check names")
    return p


# options whose values may start with "-" (e.g. --a1 "-x^-1")
_EXPRESSION_OPTIONS = {"--a0", "--a1", "--op", "--point", "--x0", "--grid"}


def _join_expression_values(argv: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _EXPRESSION_OPTIONS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def run(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(_join_expression_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code = args.func(args)
        return int(code or 0)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (HolopowError, ParseError, ValueError, KeyError, ZeroDivisionError) as exc:
        if args.json:
            print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
