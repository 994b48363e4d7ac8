import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holopow.algebra import I, Polynomial, RationalFunction, gq, laurent_bounds
from holopow.numeric import phi_quadrature
from holopow.stats import (
    FIXTURE_NAMES,
    BetaParams,
    DensityODE,
    PiecewisePolyDensity,
    beta_char_seed,
    beta_density_ode,
    beta_initial_terms,
    cube_char_operator,
    cube_char_seed,
    cube_density_n1,
    cube_density_ode,
    cube_initial_terms,
    initial_terms_of_Q,
    irwin_hall_density,
    reference_fixture,
    uniform_density_operator,
)
from holopow.weyl import WeylElement, indicial, residual_eval

positive_rationals = st.builds(Fraction, st.integers(1, 9), st.integers(1, 4))


# -- beta sums -------------------------------------------------------------------

def test_beta_char_seed():
    s = beta_char_seed(1, 1)
    assert s.a1 == RationalFunction.laurent({0: I, -1: -2})
    assert s.a0 == RationalFunction.laurent({-1: I})
    assert laurent_bounds(beta_char_seed(2, 3).a0) == (-1, -1)
    assert laurent_bounds(beta_char_seed(2, 3).a1) == (-1, 0)
    with pytest.raises(ValueError):
        beta_char_seed(0, 1)
    with pytest.raises(ValueError):
        BetaParams(1, -2, 3)
    with pytest.raises(ValueError):
        BetaParams(1, 2, 0)


def test_beta_char_seed_solves_characteristic_function():
    # E[exp(i t B)] for B ~ Beta(2, 3) via quadrature on the density 12 x (1-x)^2
    nodes, weights = np.polynomial.legendre.leggauss(30)
    x = 0.5 + 0.5 * nodes
    dens = 12 * x * (1 - x) ** 2
    op = beta_char_seed(2, 3).operator()
    for t in (0.3, 1.7, 4.0):
        derivs = [0.5 * np.sum(weights * dens * (1j * x) ** k * np.exp(1j * t * x)) for k in range(3)]
        assert abs(residual_eval(op, t, derivs)) < 1e-12


@pytest.mark.parametrize("n", range(1, 7))
def test_uniform_sum_operator(n):
    assert beta_density_ode(BetaParams(1, 1, n)).operator.equals_up_to_scalar(uniform_density_operator(n))


@pytest.mark.parametrize("a,b", [(1, 1), (2, 3), (Fraction(1, 2), Fraction(5, 2)), (3, 3)])
def test_f3_fixture(a, b):
    op = beta_density_ode(BetaParams(a, b, 3)).operator
    assert op.equals_up_to_scalar(reference_fixture("f3").at(a, b))


def test_f3_fixture_at_uniform():
    assert reference_fixture("f3").at(1, 1).equals_up_to_scalar(uniform_density_operator(3))


@settings(max_examples=10)
@given(positive_rationals, positive_rationals)
def test_beta_orders_and_singular_points(a, b):
    for n in range(1, 9):
        dens = beta_density_ode(BetaParams(a, b, n))
        assert dens.order == n
        assert dens.operator.is_real()
        lead = dens.leading_coefficient()
        for k in range(n + 1):
            assert lead(k).is_zero()


def test_beta_initial_terms():
    for a, b in ((2, 3), (Fraction(1, 2), Fraction(7, 3))):
        for n in (1, 2, 3, 4):
            s = beta_char_seed(a, b)
            row0 = initial_terms_of_Q(s, n, 0)
            row1 = initial_terms_of_Q(s, n, 1)
            for j in range(2, n + 2):
                assert row0[j] == beta_initial_terms(a, b, n, j)[0]
            for j in range(1, n + 2):
                assert row1[j] == beta_initial_terms(a, b, n, j)[1]


def test_beta_initial_terms_example():
    (e0, c0), (e1, c1) = beta_initial_terms(2, 3, 3, 2)
    assert (e0, c0) == (-1, 6 * I)
    assert (e1, c1) == (-1, gq(-15))


# -- Irwin-Hall ------------------------------------------------------------------

def _antiderivative(p):
    return [Fraction(0)] + [c / (k + 1) for k, c in enumerate(p)]


def _polyval(p, x):
    return sum(c * x ** k for k, c in enumerate(p))


def _shift(p, s):
    # coefficients of p(x + s)
    out = [Fraction(0)] * len(p)
    for k, c in enumerate(p):
        for j in range(k + 1):
            out[j] += c * math.comb(k, j) * s ** (k - j)
    return out


def _add(p, q):
    m = max(len(p), len(q))
    return [(p[k] if k < len(p) else 0) + (q[k] if k < len(q) else 0) for k in range(m)]


def _convolve_uniform(pieces):
    """Pieces of f * 1_[0,1] from pieces of f on [k, k+1]:
    g(x) = int_{x-1}^{x} f(s) ds."""
    m = len(pieces)
    prims = [_antiderivative(p) for p in pieces]
    out = []
    for k in range(m + 1):
        g = [Fraction(0)]
        if k < m:  # int_k^x f_k
            g = _add(g, prims[k])
            g = _add(g, [-_polyval(prims[k], k)])
        if k >= 1:  # int_{x-1}^k f_{k-1}
            g = _add(g, [_polyval(prims[k - 1], k)])
            g = _add(g, [-c for c in _shift(prims[k - 1], -1)])
        out.append(g)
    return out


def convolution_oracle(n):
    pieces = [[Fraction(1)]]
    for _ in range(n - 1):
        pieces = _convolve_uniform(pieces)
    return pieces


def _strip(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


@pytest.mark.parametrize("n", range(2, 9))
def test_irwin_hall_matches_convolution(n):
    dens = irwin_hall_density(n)
    oracle = convolution_oracle(n)
    assert len(dens.pieces) == len(oracle) == n
    for got, want in zip(dens.pieces, oracle):
        assert [c.re for c in got.coeffs] == _strip(want)
        assert all(c.im == 0 for c in got.coeffs)
    assert dens.c == [Fraction((-1) ** j * math.comb(n, j), math.factorial(n - 1)) for j in range(n)]


def test_irwin_hall_examples():
    assert irwin_hall_density(2).c == [1, -2]
    assert irwin_hall_density(2).pieces == [Polynomial((0, 1)), Polynomial((2, -1))]
    assert irwin_hall_density(3).c == [Fraction(1, 2), Fraction(-3, 2), Fraction(3, 2)]
    assert irwin_hall_density(1)(Fraction(1, 2)) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_irwin_hall_invariants(n):
    dens = irwin_hall_density(n)
    assert dens.integral() == 1
    assert sum(c * Fraction(n - j) ** n / n for j, c in enumerate(dens.c)) == 1
    for order in range(n - 1):
        assert all(j == 0 for j in dens.derivative_jumps(order))
    if n >= 2:
        assert any(j != 0 for j in dens.derivative_jumps(n - 1))
    xs = np.linspace(0, n, 401)
    assert np.all(dens.evaluate(xs) >= -1e-14)
    # piecewise annihilation by x (x-1) ... (x-n) Dx^n: each piece has degree n-1
    op = uniform_density_operator(n)
    for piece in dens.pieces:
        assert piece.degree <= n - 1
        assert piece.derivative(n).is_zero()
    assert op.order == n


def test_irwin_hall_json_round_trip():
    dens = irwin_hall_density(5)
    back = PiecewisePolyDensity.from_dict(json.loads(dens.to_json()))
    assert back.c == dens.c and back.n == 5
    assert dens.to_dict()["c"][0] == [1, 24]
    with pytest.raises(ValueError):
        irwin_hall_density(0)


# -- cubes of normals ---------------------------------------------------------------

def test_cube_char_seed():
    s = cube_char_seed()
    assert laurent_bounds(s.a0) == (-2, -2)
    assert laurent_bounds(s.a1) == (-3, -1)
    assert s.operator().equals_up_to_scalar(cube_char_operator().to_diff_operator())
    res = indicial(cube_char_operator(), "inf")
    assert res.sorted_exponents() == [gq(Fraction(-5, 3)), gq(Fraction(-1, 3))]
    derivs = [phi_quadrature(1.5, k) for k in range(3)]
    assert abs(residual_eval(cube_char_operator(), 1.5, derivs)) < 1e-8


def test_cube_orders():
    for n in range(1, 6):
        assert cube_density_ode(n).order == 3 * n


def test_f4_fixture():
    f4 = reference_fixture("f4")
    assert f4.coefficient(1, 0) == 8 and f4.coefficient(0, 1) == 480
    assert f4.coefficient(5, 12) == 177147
    assert cube_density_ode(4).operator.equals_up_to_scalar(f4)


def test_ex_qx_fixture():
    ex = reference_fixture("ex_qx")
    assert ex.n == 3
    assert ex.kernel[3] == RationalFunction.laurent({-1: 6})
    assert set(FIXTURE_NAMES) == {"f3", "f4", "ex_qx"}
    with pytest.raises(KeyError):
        reference_fixture("f5")


def test_cube_initial_terms():
    s = cube_char_seed()
    for n in (1, 2, 3, 4):
        row0 = initial_terms_of_Q(s, n, 0)
        row1 = initial_terms_of_Q(s, n, 1)
        for j in range(2, n + 2):
            assert row0[j] == cube_initial_terms(n, j)[0]
        for j in range(1, n + 2):
            assert row1[j] == cube_initial_terms(n, j)[1]


def _closed_form_derivs(x, order):
    """Derivatives of C x^(-2/3) exp(-x^(2/3)/2) for x > 0, as sums of
    c x^p exp(-x^(2/3)/2) differentiated term by term."""
    terms = {Fraction(-2, 3): Fraction(1)}
    out = []
    for _ in range(order + 1):
        out.append(sum(float(c) * x ** float(p) for p, c in terms.items()))
        nxt = {}
        for p, c in terms.items():
            if p != 0:
                nxt[p - 1] = nxt.get(p - 1, 0) + c * p
            q = p - Fraction(1, 3)
            nxt[q] = nxt.get(q, 0) - c / 3
        terms = nxt
    scale = math.exp(-x ** (2 / 3) / 2) / (3 * math.sqrt(2 * math.pi))
    return [v * scale for v in out]


def test_cube_n1_density_annihilated():
    op = cube_density_ode(1).operator
    assert op.order == 3
    for x in np.linspace(0.3, 4.0, 10):
        stack = _closed_form_derivs(float(x), 3)
        assert stack[0] == pytest.approx(float(cube_density_n1(x)), rel=1e-14)
        scale = sum(abs(c) * abs(v) for c, v in zip(
            [p.eval_complex(x) for p in op.coefficient_polys()], stack))
        assert abs(residual_eval(op, float(x), stack)) < 1e-8 * scale


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cube_density_exponents_at_zero(n):
    res = indicial(cube_density_ode(n).operator, 0)
    assert res.regular
    want = [gq(Fraction(n + 4 * k, 3) - 1) for k in range(n + 1)] + [gq(j) for j in range(2 * n - 1)]
    key = lambda z: (z.re, z.im)  # noqa: E731
    assert sorted(res.exponents_exact, key=key) == sorted(want, key=key)


def test_density_ode_round_trip():
    dens = cube_density_ode(2)
    back = DensityODE.from_dict(json.loads(json.dumps(dens.to_dict())))
    assert back.operator == dens.operator and back.n == 2
    assert back.provenance == dens.provenance
    assert isinstance(back.operator, WeylElement)
