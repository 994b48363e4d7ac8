from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from holopow.algebra import GaussianRational, LaurentPolynomial, Polynomial, RationalFunction
from holopow.power import SecondOrderSeed
from holopow.weyl import WeylElement

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("default")

small_ints = st.integers(min_value=-6, max_value=6)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=5))
gaussians = st.builds(GaussianRational, rationals, rationals)
real_gaussians = st.builds(GaussianRational, rationals)


@st.composite
def polynomials(draw, max_degree=4, scalars=gaussians):
    coeffs = draw(st.lists(scalars, min_size=0, max_size=max_degree + 1))
    return Polynomial(coeffs)


@st.composite
def nonzero_polynomials(draw, max_degree=4, scalars=gaussians):
    p = draw(polynomials(max_degree, scalars))
    if p.is_zero():
        p = Polynomial([draw(scalars.filter(lambda z: not z.is_zero()))])
    return p


@st.composite
def rational_functions(draw, max_degree=3):
    num = draw(polynomials(max_degree))
    den = draw(nonzero_polynomials(max_degree - 1))
    return RationalFunction(num, den)


@st.composite
def laurent_polys(draw, lo=-4, hi=2, scalars=small_ints):
    mindeg = draw(st.integers(lo, hi))
    maxdeg = draw(st.integers(mindeg, hi))
    coeffs = [draw(scalars) for _ in range(maxdeg - mindeg + 1)]
    return LaurentPolynomial(mindeg, coeffs)


@st.composite
def weyl_elements(draw, max_degree=3, max_terms=4):
    keys = draw(st.lists(st.tuples(st.integers(0, max_degree), st.integers(0, max_degree)),
                         min_size=0, max_size=max_terms))
    return WeylElement({k: draw(gaussians) for k in keys})


@st.composite
def laurent_range(draw, lo, hi, nonzero_ends=True):
    """Laurent polynomial with integer coefficients and exact degree range [lo, hi]."""
    coeffs = [draw(st.integers(-4, 4)) for _ in range(hi - lo + 1)]
    if nonzero_ends:
        coeffs[0] = draw(st.sampled_from([-3, -2, -1, 1, 2, 3]))
        coeffs[-1] = draw(st.sampled_from([-3, -2, -1, 1, 2, 3]))
    return LaurentPolynomial.from_dict({lo + k: c for k, c in enumerate(coeffs)})


@st.composite
def hypothesis_seeds(draw):
    """Laurent seeds with m1 <= -1, M1 >= -1, m0 >= 2 m1 and M0 <= 2 M1."""
    m1 = draw(st.integers(-3, -1))
    M1 = draw(st.integers(max(m1, -1), 1))
    a1 = draw(laurent_range(m1, M1))
    if draw(st.booleans()) and 2 * m1 <= 2 * M1:
        m0 = draw(st.integers(2 * m1, 2 * M1))
        M0 = draw(st.integers(m0, 2 * M1))
        a0 = draw(laurent_range(m0, M0))
    else:
        a0 = LaurentPolynomial.from_dict({})
    return SecondOrderSeed(a0=a0.to_rational_function(), a1=a1.to_rational_function())


@st.composite
def laurent_seeds(draw):
    """Arbitrary Laurent seeds (no degree hypotheses)."""
    a0 = draw(laurent_polys(-3, 2))
    a1 = draw(laurent_polys(-3, 2))
    return SecondOrderSeed(a0=a0.to_rational_function(), a1=a1.to_rational_function())


@pytest.fixture
def x():
    return WeylElement.x()


@pytest.fixture
def d():
    return WeylElement.d()
