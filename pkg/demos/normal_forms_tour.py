"""A tour of exact normal-form arithmetic.

Run with:  python3 demos/normal_forms_tour.py

Everything below is computed over a cyclotomic number field, so every
printed coefficient is exact; there is no floating point anywhere.
"""

from qheisenberg import (center_generators, commutation_twist, derive_params,
                         generators, is_central, omega, product,
                         product_via_rewriting, theta)

# Fix a parameter choice: the z-x twist scalar p has order 2, the z-y
# twist scalar q has order 3, and both live in Q(zeta_6).
params = derive_params(2, 3, 1, 1)
x, y, z = generators(params)
print(f"working over Q(zeta_{params.conductor}) with p = {params.p}, "
      f"q = {params.q}")

# The defining relations order every product into the basis z^i x^j y^k.
print("\n-- reordering products --")
for a, b, label in ((y, x, "y*x"), (z, x, "z*x"), (z, y, "z*y")):
    print(f"{label:5s} = {product(a, b)}")

# y*x^2 needs two swaps; the coefficient that appears is a pq-analogue
# of the integer 2.
yxx = product(y, product(x, x))
print(f"y*x^2 = {yxx}")

# The generic closed-form product and the one-swap-at-a-time rewriting
# engine always agree; here is one spot check.
lhs = product_via_rewriting(yxx, yxx)
rhs = product(yxx, yxx)
print(f"rewriting engine agrees on (y x^2)^2: {lhs == rhs}")

# theta = yx - p^-1 xy is the element whose powers interpolate between
# the quantum plane and the classical picture.
print("\n-- the twist element --")
th = theta(params)
print(f"theta   = {th}")
print(f"theta^2 = {product(th, th)}")
print(f"theta^3 = {th ** 3}")

# theta q-commutes with each generator: moving x past theta costs q^-1.
for gen, label in ((x, "x"), (y, "y"), (z, "z")):
    twist = commutation_twist(th, label)
    print(f"{label}*theta = ({twist}) * theta*{label}")

# At a root of unity the center is large: z^m, theta^n, x^l, y^l and a
# mixed generator are all central, while x itself is not.
print("\n-- the center --")
names = [f"z^{params.m}", f"theta^{params.n}", f"x^{params.l}",
         f"y^{params.l}", "omega"]
for name, gen in zip(names, center_generators(params)):
    print(f"is_central({name}): {is_central(gen)}")
print(f"is_central(x): {is_central(x)}")

# At these parameters the only solution of p^r = q^s is trivial, so the
# mixed generator degenerates to 1.  At (4, 4) it does not.
print(f"omega at (2,3): {omega(params)}")
p44 = derive_params(4, 4, 1, 1)
print(f"omega at (4,4): {omega(p44)}")
