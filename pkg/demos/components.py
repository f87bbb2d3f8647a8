"""
Components of wedge schemes of monomial hypersurfaces
=====================================================

List the minimal primes of ``W_m(x^a y^b ...)`` with their heights and
dimensions, and see that the radical is their intersection.
"""

from wedgelab import (
    MonomialHypersurface,
    component_report,
    enumerate_minimal_primes,
    lci_verdict,
    radical_generators,
)
from wedgelab.monomial_ideals import intersect_all

# the node at m = 1 has three components of two different dimensions
X = MonomialHypersurface((1, 1))
for P in enumerate_minimal_primes(X, 1):
    rep = component_report(P, X, 1)
    gens = ", ".join(str(v) for v in P.variables(X.names))
    print(f"t = {P}  height {rep.height}  dim {rep.dim}  ({gens})")

# three factors at m = 2: heights 6, 4 and 3 all occur
X3 = MonomialHypersurface((1, 1, 1))
heights = [P.height for P in enumerate_minimal_primes(X3, 2)]
print("xyz, m = 2 heights:", sorted(heights))

# non-reduced exponents change which order tuples are minimal
print("x^2 y, m = 3:", [str(P) for P in enumerate_minimal_primes(MonomialHypersurface((2, 1)), 3)])

# the radical of the wedge ideal, and its decomposition
rad = radical_generators(X, 2)
print("radical of W_2(xy):", ", ".join(map(str, rad)))
inter = intersect_all(P.expand(X.names).as_ideal() for P in enumerate_minimal_primes(X, 2))
print("equals the intersection of its minimal primes:", inter == rad)

# in the plane the expected dimension is 3 but one component has dimension 4
print(lci_verdict(MonomialHypersurface((1, 1), 2), 1).as_dict())
