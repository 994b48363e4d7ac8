import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holopow.algebra import (
    POS_INF,
    LaurentPolynomial,
    Polynomial,
    RationalFunction,
    binomial,
    gq,
    laurent_bounds,
    parse_rational_function,
)
from holopow.errors import HypothesisError, PowerCapError, UndefinedParameterError
from holopow.power import (
    SecondOrderSeed,
    build_Q,
    charpoly_tridiagonal,
    check_2f1_recursion,
    degree_bound,
    eig_matrix,
    eig_matrix_scaled,
    eig_vector,
    falling,
    hyp2f1_terminating,
    kernel_vector,
    mindeg_lower_bound,
    power_operator,
    predicted_exponents,
    recursion_defined,
)
from holopow.stats import beta_char_seed, cube_char_seed, reference_fixture
from holopow.weyl import DiffOperator, exponent_check, fourier, indicial, residual_eval

from .conftest import hypothesis_seeds, laurent_seeds, rationals

RF = parse_rational_function


def seed(a0, a1):
    return SecondOrderSeed(a0=RF(a0), a1=RF(a1))


EXAMPLE = seed("1 + x^-2", "-x^-1")
SINE = seed("-1", "0")


def euler_seed(l1, l2):
    """x^2 f'' = (l1 + l2 - 1) x f' - l1 l2 f, solved by x^l1 and x^l2."""
    l1, l2 = Fraction(l1), Fraction(l2)
    return SecondOrderSeed(a0=RationalFunction.laurent({-2: -l1 * l2}),
                           a1=RationalFunction.laurent({-1: l1 + l2 - 1}))


def mat_vec(M, v):
    return [sum((M[i][j] * v[j] for j in range(len(v))), gq(0)) for i in range(len(M))]


# -- Q matrix and kernel -------------------------------------------------------

def test_falling():
    assert [falling(5, i) for i in range(7)] == [1, 5, 20, 60, 120, 120, 0]


def test_example_Q_and_kernel():
    ex = reference_fixture("ex_qx")
    Q = build_Q(EXAMPLE, 3)
    assert Q.shape == (4, 5)
    assert [Q[0, j] for j in range(5)] == [RF("1"), RF("0"), RF("3 + 3*x^-2"), RF("-3*x^-1 - 9*x^-3"),
                                           RF("21 + 51*x^-2 + 54*x^-4")]
    assert [[Q[i, j] for j in range(5)] for i in range(4)] == ex.Q
    v = kernel_vector(Q)
    assert v == [RF("9 + 6*x^-2 + 9*x^-4"), RF("-30*x^-1 - 9*x^-3"), RF("-10 - 3*x^-2"), RF("6*x^-1"), RF("1")]
    assert "21 + 51*x^-2 + 54*x^-4" in Q.dump()


def test_n1_Q_and_kernel():
    a0, a1 = RF("x^2 + 1/x"), RF("3 - x")
    s = SecondOrderSeed(a0=a0, a1=a1)
    Q = build_Q(s, 1)
    zero, one = RF("0"), RF("1")
    assert Q.entries == [[one, zero, a0], [zero, one, a1]]
    assert kernel_vector(Q) == [-a0, -a1, one]


@settings(max_examples=200)
@given(laurent_seeds(), st.integers(1, 6))
def test_Q_triangular_with_falling_diagonal(s, n):
    Q = build_Q(s, n)
    for i in range(n + 1):
        assert Q[i, i] == RF(str(falling(n, i)))
        for j in range(i):
            assert Q[i, j].is_zero()
    assert Q.column(1) == [RF("0"), RF(str(n))] + [RF("0")] * (n - 1)
    v = kernel_vector(Q)
    for i in range(n + 1):
        assert sum((Q[i, j] * v[j] for j in range(n + 2)), RF("0")).is_zero()


@settings(max_examples=200)
@given(laurent_seeds())
def test_n1_recovers_seed(s):
    pw = power_operator(s, 1)
    assert pw.order == 2
    assert pw.operator.equals_up_to_scalar(s.operator())


# -- operators and annihilation -------------------------------------------------

def test_example_operator():
    pw = power_operator(EXAMPLE, 3)
    want = DiffOperator([RF("9 + 6*x^2 + 9*x^4"), RF("-30*x^3 - 9*x"), RF("-10*x^4 - 3*x^2"),
                         RF("6*x^3"), RF("x^4")])
    assert pw.operator == want
    assert [str(p) for p in pw.kernel][-1] == str(Polynomial((0, 0, 0, 0, 1)))
    assert pw.max_degree() == 4


def test_sine_square():
    assert power_operator(SINE, 2).operator == DiffOperator([RF("0"), RF("4"), RF("0"), RF("1")])


def _sine_power_stack(n, x, order, phase=0.4):
    # sin(x+p)^n = (2i)^-n sum_k C(n,k) (-1)^k exp(i (n-2k)(x+p))
    out = []
    for m in range(order + 1):
        acc = 0j
        for k in range(n + 1):
            w = n - 2 * k
            acc += binomial(n, k) * (-1) ** k * (1j * w) ** m * cmath.exp(1j * w * (x + phase))
        out.append(acc / (2j) ** n)
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_sine_powers_annihilated(n):
    op = power_operator(SINE, n).operator
    for x in [0.1 + 0.37 * k for k in range(10)]:
        stack = _sine_power_stack(n, x, op.order)
        assert abs(residual_eval(op, x, stack)) < 1e-9


def _euler_power_stack(l1, l2, n, x, order, c=2.0):
    # (x^l1 + c x^l2)^n = sum_k C(n,k) c^k x^((n-k) l1 + k l2)
    out = []
    for m in range(order + 1):
        acc = 0.0
        for k in range(n + 1):
            mu = (n - k) * float(l1) + k * float(l2)
            fall = math.prod(mu - r for r in range(m))
            acc += binomial(n, k) * c ** k * fall * x ** (mu - m)
        out.append(acc)
    return out


@pytest.mark.parametrize("l1,l2", [(Fraction(1, 2), Fraction(-1, 3)), (2, 5), (Fraction(-3, 2), Fraction(7, 4))])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_euler_powers_annihilated(l1, l2, n):
    op = power_operator(euler_seed(l1, l2), n).operator
    for x in [0.4 + 0.25 * k for k in range(10)]:
        stack = _euler_power_stack(l1, l2, n, x, op.order)
        scale = max(abs(v) for v in stack)
        assert abs(residual_eval(op, x, stack)) < 1e-9 * max(1.0, scale)


def test_power_cap(monkeypatch):
    monkeypatch.setenv("HOLOPOW_MAX_N", "3")
    with pytest.raises(PowerCapError):
        power_operator(SINE, 4)
    assert power_operator(SINE, 3).order == 4
    monkeypatch.delenv("HOLOPOW_MAX_N")
    with pytest.raises(ValueError):
        power_operator(SINE, 0)


# -- degree bound ----------------------------------------------------------------

def test_degree_bound_examples():
    beta = beta_char_seed(2, 3)
    cube = cube_char_seed()
    for n in range(1, 6):
        assert degree_bound(beta, n) == n
        assert power_operator(beta, n).max_degree() == n
        assert degree_bound(cube, n) == 3 * n
        assert power_operator(cube, n).max_degree() == 3 * n


def test_degree_bound_hypothesis_errors():
    # m0 = m1 = M0 = M1 = -1 breaks M0 <= 2 M1
    with pytest.raises(HypothesisError) as info:
        degree_bound(seed("x^-1", "x^-1"), 1)
    assert info.value.inequality == "M0 <= 2*M1"
    with pytest.raises(HypothesisError) as info:
        degree_bound(seed("x^-2", "1"), 2)  # m1 = 0
    assert info.value.inequality == "m1 <= -1"
    with pytest.raises(HypothesisError) as info:
        degree_bound(seed("0", "x^-3"), 2)  # M1 = -3
    assert info.value.inequality == "M1 >= -1"
    with pytest.raises(HypothesisError) as info:
        degree_bound(seed("x^-5", "x^-2 + x^-1"), 2)  # m0 = -5 < 2 m1
    assert info.value.inequality == "m0 >= 2*m1"
    with pytest.raises(ValueError):
        degree_bound(seed("1/(x+1)", "x^-1"), 2)


@settings(max_examples=100)
@given(hypothesis_seeds(), st.integers(1, 5))
def test_degree_bound_holds(s, n):
    assert power_operator(s, n).max_degree() <= degree_bound(s, n)


@settings(max_examples=100)
@given(hypothesis_seeds(), st.integers(1, 5))
def test_fourier_side_order_within_bound(s, n):
    # only the constructed operator is checked, not every annihilator
    dens = fourier(power_operator(s, n).operator.to_weyl())
    assert dens.order <= degree_bound(s, n)


@settings(max_examples=100)
@given(hypothesis_seeds(), st.integers(1, 5))
def test_mindeg_bounds_on_Q(s, n):
    Q = build_Q(s, n)
    for i in range(n + 1):
        for j in range(2, n + 2):
            lo = mindeg_lower_bound(s, i, j)
            if lo == POS_INF or Q[i, j].is_zero():
                continue
            assert laurent_bounds(Q[i, j])[0] >= lo


# -- exponents --------------------------------------------------------------------

def test_predicted_exponents_examples():
    a, b = Fraction(2), Fraction(3)
    pe = predicted_exponents(0, 1 - a - b, 4)
    assert list(pe.values) == [gq(k * (1 - a - b)) for k in range(5)]
    cube = predicted_exponents(Fraction(-1, 3), Fraction(-5, 3), 3)
    assert list(cube.values) == [gq(Fraction(-(3 + 4 * k), 3)) for k in range(4)]
    assert set(predicted_exponents(Fraction(5, 2), Fraction(5, 2), 4).values) == {gq(10)}
    swapped = predicted_exponents(Fraction(-5, 3), Fraction(-1, 3), 3)
    assert list(swapped.values) == list(reversed(cube.values))


def test_eig_matrix_examples():
    l1, l2 = gq(Fraction(2, 3)), gq(Fraction(-1, 5))
    assert eig_matrix(l1, l2, 1) == [[gq(0), -l1 * l2], [gq(1), l1 + l2]]
    cp = charpoly_tridiagonal(eig_matrix(0, 1, 3))
    assert cp == Polynomial.from_roots([0, 1, 2, 3])


@settings(max_examples=25)
@given(rationals, rationals, st.integers(1, 6))
def test_euler_seed_exponents(l1, l2, n):
    res = indicial(power_operator(euler_seed(l1, l2), n).operator, 0)
    assert res.regular
    for mu in predicted_exponents(l1, l2, n).values:
        assert exponent_check(res, mu)
    assert res.poly.monic() == charpoly_tridiagonal(eig_matrix(l1, l2, n))


# -- eigenvectors and the 2F1 identity ---------------------------------------------

def test_eig_vector_examples():
    assert eig_vector(4, 0, Fraction(3, 7)) == [gq(binomial(4, l)) for l in range(5)]
    v = eig_vector(2, 1, 2)
    assert v == [gq(1), gq(3), gq(2)]
    M = eig_matrix_scaled(2, 2)
    mu = 1 * 2 + 1
    assert mat_vec(M, v) == [c * mu for c in v]
    assert eig_vector(3, 1, 1) == [gq(1), gq(2), gq(1), gq(0)]
    with pytest.raises(IndexError):
        eig_vector(3, 4, 2)


@settings(max_examples=20)
@given(rationals.filter(lambda z: z != 1))
def test_eig_vector_relations(z):
    for n in range(1, 11):
        M = eig_matrix_scaled(n, z)
        for k in range(n + 1):
            v = eig_vector(n, k, z)
            mu = gq(z) * k + (n - k)
            assert mat_vec(M, v) == [c * mu for c in v]


def test_eig_vector_chain_at_z1():
    for n in range(1, 11):
        M = eig_matrix_scaled(n, 1)
        vs = [eig_vector(n, k, 1) for k in range(n + 1)]
        for k, v in enumerate(vs):
            lhs = [c * n - r for c, r in zip(v, mat_vec(M, v))]
            rhs = [gq(0)] * (n + 1) if k == 0 else [c * k for c in vs[k - 1]]
            assert lhs == rhs


def test_scaled_matrix_is_similar():
    # D M D^-1 / lam1 with D = diag((-lam2)^i)
    l1, l2 = gq(Fraction(3, 2)), gq(Fraction(-2, 5))
    n = 4
    M = eig_matrix(l1, l2, n)
    Ms = eig_matrix_scaled(n, l2 / l1)
    for i in range(n + 1):
        for j in range(n + 1):
            scaled = M[i][j] * (-l2) ** i / (-l2) ** j / l1
            assert scaled == Ms[i][j]


def test_hyp2f1_terminating():
    z = gq(Fraction(2, 3))
    # 2F1(-2, b; c; z) = 1 - 2 b z / c + b (b+1) z^2 / (c (c+1))
    b, c = gq(5), gq(Fraction(7, 2))
    assert hyp2f1_terminating(-2, b, c, z) == 1 - 2 * b * z / c + b * (b + 1) * z * z / (c * (c + 1))
    with pytest.raises(UndefinedParameterError):
        hyp2f1_terminating(-3, 2, -1, z)
    with pytest.raises(ValueError):
        hyp2f1_terminating(Fraction(1, 2), 2, 3, z)


def test_2f1_recursion_examples():
    assert check_2f1_recursion(1, 1, 4, 2)
    assert check_2f1_recursion(2, 1, 5, Fraction(1, 3))
    for l in range(5):
        for n in range(l + 2, 9):
            assert check_2f1_recursion(0, l, n, Fraction(5, 7))


@settings(max_examples=5)
@given(rationals)
def test_2f1_recursion_all_defined(z):
    for n in range(9):
        for k in range(n + 1):
            for l in range(n + 1):
                if recursion_defined(k, l, n):
                    assert check_2f1_recursion(k, l, n, z)
