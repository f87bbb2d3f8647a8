"""Literal filter over every order tuple; no cleverness on purpose."""

from __future__ import annotations

import itertools
from typing import Sequence

MAX_GRID = 10**7


class ScaleError(ValueError):
    pass


def brute_force_minimal_primes(a: Sequence[int], m: int) -> set:
    """All componentwise-minimal ``t in {0..m+1}^r`` with ``sum a_k t_k >= m + 1``."""
    r = len(a)
    if (m + 2) ** r > MAX_GRID:
        raise ScaleError(f"grid (m+2)^r = {(m + 2) ** r} exceeds {MAX_GRID}")
    feasible = [
        t for t in itertools.product(range(m + 2), repeat=r)
        if sum(e * x for e, x in zip(a, t)) >= m + 1
    ]
    # anything dominated is dominated by a minimal element, and minimal elements
    # of smaller coordinate sum come first
    feasible.sort(key=sum)
    minimal = []
    for t in feasible:
        if not any(all(u <= x for u, x in zip(s, t)) for s in minimal):
            minimal.append(t)
    return set(minimal)
