"""Random points over a prime field."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..components import MonomialHypersurface, StaircasePrime
from ..schemes import WedgeIdeal
from ..series import wedge_indices
from ..polynomial import wedge


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FieldPoint:
    q: int
    assignment: dict = field(compare=False)

    def __post_init__(self):
        if not _is_prime(self.q):
            raise ValueError(f"{self.q} is not prime")
        object.__setattr__(self, "assignment", {v: x % self.q for v, x in self.assignment.items()})


def random_point(variables, q: int, rng: random.Random, zero=(), nonzero: bool = True) -> FieldPoint:
    """Variables in ``zero`` get 0; the rest are drawn uniformly (from 1..q-1 if ``nonzero``)."""
    zero = set(zero)
    lo = 1 if nonzero else 0
    return FieldPoint(q, {v: 0 if v in zero else rng.randrange(lo, q) for v in variables})


def sample_vanishing(
    X: MonomialHypersurface,
    P: StaircasePrime,
    m: int,
    q: int = 65521,
    trials: int = 5,
    rng: random.Random | None = None,
    ideal: WedgeIdeal | None = None,
) -> bool:
    """Every wedge equation vanishes at random points of ``V(P)``.

    Points have the prime's variables at zero and nonzero random values
    elsewhere, so their order profile is exactly ``P.t``.
    """
    if q <= 2 or not _is_prime(q):
        raise ValueError("q must be an odd prime")
    rng = rng or random.Random(0)
    W = ideal if ideal is not None else X.wedge_ideal(m)
    gens = W.flat()
    variables = [wedge(n, i, j) for n in X.names for i, j in wedge_indices(m)]
    inside = P.expand(X.names)
    for _ in range(trials):
        pt = random_point(variables, q, rng, zero=inside).assignment
        if any(g.evaluate(pt, modulus=q) for g in gens):
            return False
    return True
