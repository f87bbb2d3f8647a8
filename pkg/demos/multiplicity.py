"""
Multiplicity-one certificates
=============================

For reduced monomial hypersurfaces the wedge ideal has multiplicity one
along each component when enough wedge equations have independent
linear parts modulo ``P^2``.
"""

from wedgelab import MonomialHypersurface, StaircasePrime, certify, conjecture_sweep
from wedgelab.multiplicity import paper_matrix, paper_selection

X = MonomialHypersurface((1, 1, 1))
P = StaircasePrime(2, (1, 1, 1))

# which equation is matched with which prime variable
for var, (i, j) in paper_selection(X, P, 2):
    print(f"{var}  <-  g_({i},{j})")

# after the specialisation the matrix is unitriangular
for row in paper_matrix(X.wedge_ideal(2), X, P, 2):
    print(row)

cert = certify(X, P, 2)
print(cert.verdict, "det =", cert.det_or_rank)

# four factors: no explicit selection, so use random points over F_q
X4 = MonomialHypersurface((1, 1, 1, 1))
cert = certify(X4, StaircasePrime(3, (1, 1, 1, 1)), 3, "randomized", seed=1)
print(cert.verdict, "rank", cert.det_or_rank, "after", cert.trials_used, "trial(s)")

# a whole sweep; the same seed always gives the same table
res = conjecture_sweep(4, 3, seed=0)
print(len(res.rows), "components, all proven:", res.all_proven)
