"""Density operators for sums of Beta variables and the uniform special case.

Run: python3 demos/beta_sums.py
"""
from fractions import Fraction

from holopow.stats import BetaParams, beta_density_ode, irwin_hall_density
from holopow.weyl import indicial, operator_to_text

for a, b in [(1, 1), (2, 3), (Fraction(1, 2), Fraction(5, 2))]:
    dens = beta_density_ode(BetaParams(a, b, 3))
    lead = dens.leading_coefficient()
    roots = [k for k in range(5) if lead(k).is_zero()]
    print(f"a={a}, b={b}: order {dens.order}, leading coefficient vanishes at {roots}")
    print("  ", operator_to_text(dens.operator))
    res = indicial(dens.operator, 0)
    print("   exponents at 0:", ", ".join(str(z) for z in res.sorted_exponents()))

print("\nsum of uniforms, exact piecewise density:")
for n in range(2, 6):
    d = irwin_hall_density(n)
    print(f"n={n}: c = {[str(c) for c in d.c]}, integral = {d.integral()}")
    print("   f at 1/2, 1, n/2:", d(Fraction(1, 2)), d(Fraction(1)), d(Fraction(n, 2)))
