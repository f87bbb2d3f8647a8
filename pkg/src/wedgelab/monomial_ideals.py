"""Monomial ideals, their radicals and the minimal primes of square-free ones.

A :class:`MonomialIdeal` always stores its divisibility-minimal generating
set, so equality of objects is equality of ideals.  The zero ideal has no
generators; the unit ideal is generated by the empty monomial.
"""

from __future__ import annotations

from typing import Iterable

from .polynomial import Monomial, Polynomial, Variable

__all__ = [
    "MonomialIdeal",
    "VariablePrime",
    "minimalize",
    "radical_monomial",
    "intersect",
    "intersect_all",
    "prime_contains",
    "minimal_primes_squarefree",
    "sum_radical",
]


def _minimal(monos: Iterable[Monomial]) -> frozenset:
    cands = sorted(set(monos), key=lambda u: (u.degree, len(u)))
    # kept generators indexed by their first variable; g | u needs that variable in u
    index: dict = {}
    kept = []
    for u in cands:
        if not u:
            return frozenset([u])
        exps = dict(u)
        dominated = False
        for v in exps:
            for g in index.get(v, ()):
                if all(exps.get(w, 0) >= e for w, e in g):
                    dominated = True
                    break
            if dominated:
                break
        if not dominated:
            kept.append(u)
            index.setdefault(u[0][0], []).append(u)
    return frozenset(kept)


class MonomialIdeal:
    __slots__ = ("gens",)

    def __init__(self, gens: Iterable[Monomial] = ()):
        self.gens = _minimal(Monomial(g) if not isinstance(g, Monomial) else g for g in gens)

    @classmethod
    def generated_by(cls, *gens) -> "MonomialIdeal":
        return cls(gens)

    @classmethod
    def of_variables(cls, variables: Iterable[Variable]) -> "MonomialIdeal":
        return cls(Monomial.of(v) for v in variables)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return Monomial() in self.gens

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def contains_monomial(self, u: Monomial) -> bool:
        return any(g.divides(u) for g in self.gens)

    def sorted_gens(self) -> list:
        return sorted(self.gens, key=lambda g: (g.degree, [v.key for v, _ in g], [e for _, e in g]))

    def variables(self) -> set:
        return {v for g in self.gens for v, _ in g}

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.sorted_gens())

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.gens == other.gens

    def __hash__(self) -> int:
        return hash(self.gens)

    def __repr__(self) -> str:
        return "MonomialIdeal(" + ", ".join(str(g) for g in self.sorted_gens()) + ")"


class VariablePrime(frozenset):
    """Prime generated by a set of variables."""

    __slots__ = ()

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.of_variables(self)

    @property
    def height(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return "VariablePrime(" + ", ".join(str(v) for v in sorted(self)) + ")"


def minimalize(gens: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal(gens)


def radical_monomial(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(g.support() for g in I.gens)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(u.lcm(v) for u in I.gens for v in J.gens)


def intersect_all(ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    """Intersection of a nonempty family (the empty family gives the unit ideal)."""
    acc = MonomialIdeal([Monomial()])
    for J in ideals:
        acc = intersect(acc, J)
    return acc


def prime_contains(P: Iterable[Variable], f: Polynomial) -> bool:
    """A polynomial lies in a variable prime iff each of its terms does."""
    P = P if isinstance(P, (set, frozenset)) else set(P)
    return all(any(v in P for v, _ in mono) for mono in f.terms)


def minimal_primes_squarefree(I: MonomialIdeal) -> set:
    """Inclusion-minimal variable primes containing a square-free ``I``.

    These are the minimal covers of the generator supports.  The search
    branches on a shortest remaining support: the i-th branch puts its
    i-th variable in the cover and excludes the earlier ones, so branches
    are disjoint.  Sub-families are memoised.
    """
    if not I.is_squarefree():
        raise ValueError("minimal_primes_squarefree needs a square-free monomial ideal")
    if I.is_unit():
        return set()
    family = frozenset(frozenset(v for v, _ in g) for g in I.gens)
    memo: dict = {}

    def reduce(fam):
        # drop supports containing another support: covering the smaller covers both
        ordered = sorted(fam, key=len)
        keep = []
        for s in ordered:
            if not any(k <= s for k in keep):
                keep.append(s)
        return frozenset(keep)

    def covers(fam: frozenset) -> frozenset:
        if fam in memo:
            return memo[fam]
        if not fam:
            return frozenset([frozenset()])
        if frozenset() in fam:
            return frozenset()
        shortest = min(fam, key=lambda s: (len(s), sorted(v.key for v in s)))
        found = set()
        excluded: set = set()
        for v in sorted(shortest):
            rest = {s for s in fam if v not in s}
            if excluded:
                rest = {s - excluded for s in rest}
            for c in covers(reduce(rest)):
                found.add(c | {v})
            excluded.add(v)
        result = frozenset(found)
        memo[fam] = result
        return result

    raw = covers(reduce(family))
    minimal = {c for c in raw if not any(d < c for d in raw)}
    return {VariablePrime(c) for c in minimal}


def sum_radical(ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    """``sqrt(I_1 + ... + I_k)`` as the sum of the individual radicals."""
    gens = []
    for I in ideals:
        gens.extend(radical_monomial(I).gens)
    return MonomialIdeal(gens)
