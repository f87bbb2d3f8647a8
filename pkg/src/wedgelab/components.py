"""Components of wedge schemes of monomial hypersurfaces, in closed form.

For ``X = V(x_1^a_1 ... x_r^a_r)`` inside ``A^N`` every minimal prime of the
m-th wedge ideal is a *staircase prime*

    P(t) = (x_k^(i,j) : i + j < t_k),   0 <= t_k <= m + 1,

indexed by an order tuple ``t`` with ``sum a_k t_k >= m + 1`` that is
minimal for the componentwise order.  ``P(t)`` has height
``sum t_k (t_k + 1) / 2`` inside a wedge space of dimension
``N (m + 1)(m + 2) / 2``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Mapping, Sequence

from .monomial_ideals import MonomialIdeal, VariablePrime, sum_radical
from .polynomial import Monomial, Polynomial, Variable, plain, wedge
from .schemes import AffineIdealInput, WedgeIdeal, build_wedge_ideal
from .series import wedge_indices

__all__ = [
    "MonomialHypersurface",
    "StaircasePrime",
    "ComponentReport",
    "LciVerdict",
    "default_names",
    "wedge_space_dim",
    "enumerate_minimal_primes",
    "reduced_minimal_primes",
    "radical_generators",
    "radical_monomial_scheme",
    "component_report",
    "lci_verdict",
    "order_profile",
    "witness_point",
]


def default_names(N: int) -> tuple:
    if N <= 4:
        return tuple("xyzw"[:N])
    return tuple(f"x{k}" for k in range(1, N + 1))


def wedge_space_dim(N: int, m: int) -> int:
    return N * (m + 1) * (m + 2) // 2


@dataclass(frozen=True)
class MonomialHypersurface:
    """``x_1^a_1 ... x_r^a_r = 0`` in ``A^N``; ``N`` defaults to ``r``."""

    a: tuple
    N: int = 0
    names: tuple = ()

    def __post_init__(self):
        a = tuple(int(e) for e in self.a)
        if not a or any(e < 1 for e in a):
            raise ValueError("exponents must be a nonempty vector of positive integers")
        N = self.N or len(a)
        if N < len(a):
            raise ValueError(f"ambient dimension N={N} is smaller than r={len(a)}")
        names = tuple(self.names) or default_names(N)
        if len(names) != N or len(set(names)) != N:
            raise ValueError("need exactly N distinct variable names")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "names", names)

    @property
    def r(self) -> int:
        return len(self.a)

    @property
    def reduced(self) -> bool:
        return all(e == 1 for e in self.a)

    def polynomial(self) -> Polynomial:
        return Polynomial.monomial(Monomial((plain(n), e) for n, e in zip(self.names, self.a)))

    def ideal_input(self) -> AffineIdealInput:
        return AffineIdealInput(tuple(plain(n) for n in self.names), (self.polynomial(),))

    def wedge_ideal(self, m: int) -> WedgeIdeal:
        return build_wedge_ideal(self.ideal_input(), m)


@dataclass(frozen=True, order=True)
class StaircasePrime:
    m: int
    t: tuple

    def __post_init__(self):
        t = tuple(int(x) for x in self.t)
        if any(x < 0 or x > self.m + 1 for x in t):
            raise ValueError(f"order tuple {t} out of range 0..{self.m + 1}")
        object.__setattr__(self, "t", t)

    @property
    def height(self) -> int:
        return sum(x * (x + 1) // 2 for x in self.t)

    def is_feasible(self, a: Sequence[int]) -> bool:
        return sum(e * x for e, x in zip(a, self.t)) >= self.m + 1

    def variables(self, names: Sequence[str]) -> list:
        """Generators of the prime in graded order, variable by variable."""
        return [wedge(n, i, j) for n, tk in zip(names, self.t) for i, j in wedge_indices(tk - 1)]

    def expand(self, names: Sequence[str]) -> VariablePrime:
        return VariablePrime(self.variables(names))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.t)) + ")"


@dataclass(frozen=True)
class ComponentReport:
    prime: StaircasePrime
    height: int
    dim: int


@dataclass(frozen=True)
class LciVerdict:
    dim: int
    expected_dim: int
    pure_dimensional: bool
    irreducible: bool
    component_dims: tuple
    # the dimension test (dim == expected) should agree with pure_dimensional
    matches_dimension_criterion: bool

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "expected_dim": self.expected_dim,
            "pure_dimensional": self.pure_dimensional,
            "irreducible": self.irreducible,
            "component_dims": list(self.component_dims),
            "matches_dimension_criterion": self.matches_dimension_criterion,
        }


def _minimal_tuples(a: Sequence[int], m: int) -> list:
    """Componentwise-minimal tuples in the upward-closed feasible region.

    Since the region is upward closed, ``t`` is minimal iff lowering any
    single positive entry by one leaves the region.  Tuples are grown
    coordinate by coordinate; a partial tuple whose weight already
    exceeds the threshold by more than the smallest exponent used so far
    cannot complete to a minimal one.
    """
    r = len(a)
    need = m + 1
    out = []

    def grow(k, prefix, weight, slack_floor):
        if k == r:
            if weight >= need and all(weight - a[i] < need for i in range(r) if prefix[i] > 0):
                out.append(tuple(prefix))
            return
        for tk in range(m + 2):
            w = weight + a[k] * tk
            floor = min(slack_floor, a[k]) if tk else slack_floor
            if w - floor >= need:
                break
            prefix.append(tk)
            grow(k + 1, prefix, w, floor)
            prefix.pop()

    grow(0, [], 0, float("inf"))
    return out


def enumerate_minimal_primes(X: MonomialHypersurface, m: int) -> list:
    """Minimal primes of the m-th wedge ideal of ``X``, largest tuple first."""
    if m < 0:
        raise ValueError("m must be >= 0")
    tuples = _minimal_tuples(X.a, m)
    if X.reduced:
        closed = reduced_minimal_primes(X.r, m)
        if sorted(tuples) != sorted(p.t for p in closed):
            raise AssertionError("staircase sweep disagrees with the composition formula")
    return [StaircasePrime(m, t) for t in sorted(tuples, reverse=True)]


def reduced_minimal_primes(r: int, m: int) -> list:
    """Reduced case: the weak compositions of ``m + 1`` into ``r`` parts."""
    out = []
    for bars in itertools.combinations(range(m + r), r - 1):
        parts, prev = [], -1
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(m + r - prev - 1)
        out.append(StaircasePrime(m, tuple(parts)))
    assert len(out) == comb(m + r, r - 1)
    return sorted(out, key=lambda p: p.t, reverse=True)


def _factor_supports(name: str, a: int, m: int) -> dict:
    """Supports of degree-``a`` products of ``name``'s wedge variables -> least weight."""
    best: dict = {}
    for combo in itertools.combinations_with_replacement(wedge_indices(m), a):
        w = sum(i + j for i, j in combo)
        if w > m:
            continue
        support = frozenset(combo)
        if w < best.get(support, m + 1):
            best[support] = w
    return {frozenset(wedge(name, i, j) for i, j in s): w for s, w in best.items()}


def _radical_of_monomial(factors: Sequence[tuple], m: int) -> MonomialIdeal:
    per_var = [sorted(_factor_supports(n, e, m).items(), key=lambda sw: sw[1]) for n, e in factors]
    gens = []

    def combine(k, acc, weight):
        if k == len(per_var):
            gens.append(Monomial.of(*acc))
            return
        for support, w in per_var[k]:
            if weight + w > m:
                break
            combine(k + 1, acc + list(support), weight + w)

    combine(0, [], 0)
    return MonomialIdeal(gens)


def radical_generators(X: MonomialHypersurface, m: int) -> MonomialIdeal:
    """Square-free parts of all terms of the wedge equations, minimalized.

    Each term picks ``a_k`` superscript pairs for ``x_k`` with total
    superscript sum at most ``m``; only its support matters.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    return _radical_of_monomial(list(zip(X.names, X.a)), m)


def radical_monomial_scheme(gens: Sequence[Sequence[int]], m: int, names: Sequence[str] | None = None) -> MonomialIdeal:
    """Radical of the wedge ideal of the scheme cut out by several monomials.

    ``gens`` are exponent vectors over a common list of variables.  The
    radical of a sum of monomial ideals is the sum of their radicals, so
    each generator is handled as its own hypersurface.
    """
    if not gens:
        raise ValueError("need at least one monomial generator")
    N = len(gens[0])
    if any(len(g) != N for g in gens):
        raise ValueError("exponent vectors must have equal length")
    names = tuple(names) if names else default_names(N)
    parts = []
    for g in gens:
        factors = [(n, e) for n, e in zip(names, g) if e > 0]
        if not factors:
            # constant generator: the unit ideal
            parts.append(MonomialIdeal([Monomial()]))
            continue
        parts.append(_radical_of_monomial(factors, m))
    return sum_radical(parts)


def component_report(P: StaircasePrime, X: MonomialHypersurface, m: int) -> ComponentReport:
    if P.m != m or len(P.t) != X.r:
        raise ValueError("prime does not belong to this hypersurface and order")
    if not P.is_feasible(X.a):
        raise ValueError(f"order tuple {P.t} is infeasible for exponents {X.a} at m={m}")
    h = P.height
    return ComponentReport(P, h, wedge_space_dim(X.N, m) - h)


def lci_verdict(X: MonomialHypersurface, m: int) -> LciVerdict:
    """Dimension and pure-dimensionality of the wedge scheme of a hypersurface.

    ``X`` has dimension ``N - 1``; the expected dimension of its m-th wedge
    scheme is ``(N - 1)(m + 1)(m + 2) / 2``.
    """
    reports = [component_report(P, X, m) for P in enumerate_minimal_primes(X, m)]
    dims = tuple(r.dim for r in reports)
    dim = max(dims)
    expected = wedge_space_dim(X.N - 1, m)
    pure = len(set(dims)) == 1
    return LciVerdict(
        dim=dim,
        expected_dim=expected,
        pure_dimensional=pure,
        irreducible=len(reports) == 1,
        component_dims=dims,
        matches_dimension_criterion=pure == (dim == expected),
    )


def order_profile(point: Mapping[Variable, object], X: MonomialHypersurface, m: int) -> tuple:
    """Vanishing order of each factor's series at ``point``, capped at ``m + 1``.

    The point lies on the wedge scheme exactly when ``sum a_k t_k >= m + 1``.
    """
    t = []
    for name in X.names[: X.r]:
        order = m + 1
        for i, j in wedge_indices(m):
            v = wedge(name, i, j)
            if v not in point:
                raise KeyError(f"point does not assign {v}")
            if point[v] != 0:
                order = i + j
                break
        t.append(order)
    return tuple(t)


def witness_point(P: StaircasePrime, X: MonomialHypersurface, m: int, fill: int = 1) -> dict:
    """Point with the prime's variables at 0 and every other wedge variable at ``fill``."""
    inside = P.expand(X.names)
    return {
        wedge(n, i, j): (0 if wedge(n, i, j) in inside else fill)
        for n in X.names
        for i, j in wedge_indices(m)
    }
