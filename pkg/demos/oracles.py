"""
Checking the closed forms against independent oracles
=====================================================

Brute-force tuple filtering, random points over a finite field and a
small Groebner engine, each applied to the node ``xy``.
"""

import random

from wedgelab import MonomialHypersurface, enumerate_minimal_primes, parse_polynomial
from wedgelab.oracle import brute_force_minimal_primes, groebner, ideal_equal, ideal_quotient, sample_vanishing

X = MonomialHypersurface((1, 2, 1))
closed = {P.t for P in enumerate_minimal_primes(X, 3)}
print("closed form agrees with brute force:", closed == brute_force_minimal_primes(X.a, 3))

# wedge equations vanish at random points of every component
rng = random.Random(0)
print("vanishing:", all(sample_vanishing(X, P, 3, rng=rng) for P in enumerate_minimal_primes(X, 3)))

# the node at m = 1 also has an embedded prime, visible as a colon ideal
W = MonomialHypersurface((1, 1)).wedge_ideal(1).flat()
h = parse_polynomial("x_(0,0)*y_(1,0)")
quotient = ideal_quotient(W, h)
print("(W_1 : h) =", ", ".join(map(str, quotient)))
embedded = [parse_polynomial(s) for s in ("x_(0,0)", "y_(0,0)", "x_(0,1)*y_(1,0) - x_(1,0)*y_(0,1)")]
print("matches the embedded prime:", ideal_equal(quotient, embedded))

G = groebner(W)
print("Groebner basis of W_1(xy) has", len(G), "elements")
