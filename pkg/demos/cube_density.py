"""Numeric density of a sum of n cubed standard normals.

Initial derivatives at x0 come from inverting the characteristic function,
then the density equation is integrated across a grid and compared with a
Monte Carlo kernel estimate.

Run: python3 demos/cube_density.py [n]
"""
import sys

import numpy as np

from holopow.numeric import InitialValueJob, initial_values, ivp_solve, monte_carlo_density
from holopow.stats import cube_density_n1, cube_density_ode

n = int(sys.argv[1]) if len(sys.argv) > 1 else 2
xs = np.linspace(0.5, 4.0, 15)
dens = cube_density_ode(n)
print(f"density equation of order {dens.order}")

iv = initial_values(InitialValueJob(n=n, x0=1.0))
print("f, f', ... at x0 = 1:", np.array2string(iv, precision=6))

sol = ivp_solve(dens, 1.0, iv, xs)
mc = monte_carlo_density(n, xs, samples=10 ** 6, seed=0)
print(f"{'x':>6} {'ode':>12} {'monte carlo':>12} {'s.e.':>9}")
for x, f, m, se in zip(xs, sol.f.real, mc.density, mc.stderr):
    print(f"{x:6.2f} {f:12.6f} {m:12.6f} {se:9.1e}")
print(f"steps {sol.stats.steps}, rejected {sol.stats.rejected}")
if n == 1:
    print("max error vs closed form:", np.max(np.abs(sol.f.real - cube_density_n1(xs))))
