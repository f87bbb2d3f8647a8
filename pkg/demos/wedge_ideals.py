"""
Wedge and jet ideals of a plane curve
=====================================

Build the defining equations of the first wedge scheme of the node
``xy = 0`` and compare them with the jet scheme.
"""

from wedgelab import AffineIdealInput, build_jet_ideal, build_wedge_ideal, parse_polynomial
from wedgelab.schemes import diagonal_check, w1_product_check

node = AffineIdealInput.from_polynomials([parse_polynomial("x*y")])

# one equation per coefficient s^i t^j with i + j <= m
W = build_wedge_ideal(node, 1)
for (k, i, j), g in sorted(W.gens.items()):
    print(f"g_({i},{j}) = {g}")
print("wedge variables:", ", ".join(map(str, W.variables())))

# jets only see one direction
J = build_jet_ideal(node, 2)
for g in J.flat():
    print("jet:", g)

# setting s = t turns wedge equations into jet equations
print("s = t gives the jet ideal:", diagonal_check(node, 3))

# and W_1 is the fibre product of two copies of J_1 over X
print("W_1 = J_1 x_X J_1:", w1_product_check(node))

# a cusp, for comparison: more equations survive at higher order
cusp = AffineIdealInput.from_polynomials([parse_polynomial("y^2 - x^3")])
print(len(build_wedge_ideal(cusp, 3).flat()), "equations for the cusp at m = 3")
