"""Build the annihilator of f**n from a second-order seed, step by step.

Run: python3 demos/power_ode.py
"""
from holopow.algebra import parse_rational_function
from holopow.power import SecondOrderSeed, build_Q, degree_bound, kernel_vector, power_operator
from holopow.weyl import indicial, operator_to_text

# f'' = -x^-1 f' + (1 + x^-2) f, cubed
seed = SecondOrderSeed(a0=parse_rational_function("1 + x^-2"), a1=parse_rational_function("-x^-1"))
Q = build_Q(seed, 3)
print("Q (rows i = 0..3, columns j = 0..4):")
print(Q.dump())

v = kernel_vector(Q)
print("\nkernel with v_4 = 1:")
for k, vk in enumerate(v):
    print(f"  v_{k} = {vk}")

pw = power_operator(seed, 3)
print("\ncleared operator:", operator_to_text(pw.operator))

# sin(x)^n: the seed f'' = -f gives Dx^3 + 4 Dx for n = 2
sine = SecondOrderSeed(a0=parse_rational_function("-1"), a1=parse_rational_function("0"))
for n in range(1, 5):
    print(f"sin^{n}:", operator_to_text(power_operator(sine, n).operator))

# cubes of normals: coefficient degree reaches the bound 3n
cube = SecondOrderSeed(a0=parse_rational_function("-5/9*x^-2"),
                       a1=parse_rational_function("-3*x^-1 - 1/27*x^-3"))
for n in range(1, 5):
    pw = power_operator(cube, n)
    res = indicial(pw.operator, "inf")
    exps = ", ".join(str(z) for z in res.sorted_exponents())
    print(f"n={n}: max degree {pw.max_degree()} (bound {degree_bound(cube, n)}), exponents at inf: {exps}")
