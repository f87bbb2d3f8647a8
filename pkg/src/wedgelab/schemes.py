"""Defining ideals of truncated wedge schemes and jet schemes.

For ``X = V(f_1, ..., f_d)`` in affine space, the m-th wedge scheme is cut
out by the coefficients of ``s^i t^j`` (``i + j <= m``) in ``f_k`` after the
substitution ``x -> sum x_(i,j) s^i t^j``.  The jet scheme uses the
one-parameter substitution ``x -> sum x_(n) t^n`` instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .polynomial import Monomial, Polynomial, Variable, jet, wedge
from .series import TruncatedSeries, generic_image, substitute_truncated, wedge_indices

__all__ = [
    "AffineIdealInput",
    "WedgeIdeal",
    "JetIdeal",
    "build_wedge_ideal",
    "build_jet_ideal",
    "diagonal_check",
    "w1_product_check",
    "jet_coefficients",
]


@dataclass(frozen=True)
class AffineIdealInput:
    ambient_vars: tuple
    generators: tuple

    def __post_init__(self):
        vs = tuple(self.ambient_vars)
        gens = tuple(self.generators)
        if len(set(vs)) != len(vs):
            raise ValueError("ambient variables must be distinct")
        if any(v.kind != "plain" for v in vs):
            raise ValueError("ambient variables must be plain")
        for g in gens:
            if g.is_zero():
                raise ValueError("generators must be nonzero")
            stray = g.variables() - set(vs)
            if stray:
                names = ", ".join(sorted(str(v) for v in stray))
                raise ValueError(f"generator {g} uses variables outside the ambient ring: {names}")
        object.__setattr__(self, "ambient_vars", vs)
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_polynomials(cls, generators: Sequence[Polynomial], ambient: Sequence[Variable] | None = None):
        """Ambient ring defaults to the variables the generators use, sorted."""
        if ambient is None:
            ambient = sorted(set().union(*(g.variables() for g in generators)))
        return cls(tuple(ambient), tuple(generators))

    @property
    def N(self) -> int:
        return len(self.ambient_vars)


@dataclass(frozen=True)
class WedgeIdeal:
    m: int
    source: AffineIdealInput
    gens: dict = field(compare=False)

    def variables(self) -> list:
        """All wedge coordinates of the ambient wedge space."""
        return [wedge(v.base, i, j) for v in self.source.ambient_vars for i, j in wedge_indices(self.m)]

    def generator(self, k: int, i: int, j: int) -> Polynomial:
        return self.gens[k, i, j]

    def flat(self) -> list:
        """Nonzero generators, structurally deduplicated, in construction order."""
        seen = set()
        out = []
        for g in self.gens.values():
            if g and g not in seen:
                seen.add(g)
                out.append(g)
        return out


@dataclass(frozen=True)
class JetIdeal:
    m: int
    source: AffineIdealInput
    gens: dict = field(compare=False)

    def variables(self) -> list:
        return [jet(v.base, n) for v in self.source.ambient_vars for n in range(self.m + 1)]

    def flat(self) -> list:
        seen = set()
        out = []
        for g in self.gens.values():
            if g and g not in seen:
                seen.add(g)
                out.append(g)
        return out


def build_wedge_ideal(source: AffineIdealInput, m: int) -> WedgeIdeal:
    if m < 0:
        raise ValueError("m must be >= 0")
    images = {v: generic_image(v, m) for v in source.ambient_vars}
    gens = {}
    for k, f in enumerate(source.generators):
        phi = substitute_truncated(f, images, m)
        for i, j in wedge_indices(m):
            gens[k, i, j] = phi[i, j]
    return WedgeIdeal(m, source, gens)


def _jet_image(v: Variable, m: int, copy: str = "") -> dict:
    return {n: Polynomial.var(jet(v.base, n, copy)) for n in range(m + 1)}


def jet_coefficients(f: Polynomial, ambient: Sequence[Variable], m: int, copy: str = "") -> list:
    """Coefficients of ``t^0..t^m`` in ``f(sum x_(n) t^n)`` modulo ``t^(m+1)``.

    Computed on the t-axis of the bivariate series (all s-degrees zero), so
    truncation is handled the same way as for wedges.
    """
    images = {
        v: TruncatedSeries(m, {(0, n): c for n, c in _jet_image(v, m, copy).items()})
        for v in ambient
    }
    phi = substitute_truncated(f, images, m)
    return [phi[0, n] for n in range(m + 1)]


def build_jet_ideal(source: AffineIdealInput, m: int) -> JetIdeal:
    if m < 0:
        raise ValueError("m must be >= 0")
    gens = {}
    for k, f in enumerate(source.generators):
        for n, g in enumerate(jet_coefficients(f, source.ambient_vars, m)):
            gens[k, n] = g
    return JetIdeal(m, source, gens)


def diagonal_check(source: AffineIdealInput, m: int) -> bool:
    """Setting ``s = t`` must turn the wedge equations into the jet equations.

    Checks ``G_n(x_(n) -> sum_{i+j=n} x_(i,j)) == sum_{i+j=n} g_ij`` for every
    generator and every ``n <= m``.
    """
    W = build_wedge_ideal(source, m)
    J = build_jet_ideal(source, m)
    diag = {
        jet(v.base, n): Polynomial({Monomial.of(wedge(v.base, n - j, j)): 1 for j in range(n + 1)})
        for v in source.ambient_vars
        for n in range(m + 1)
    }
    for k in range(len(source.generators)):
        for n in range(m + 1):
            lhs = J.gens[k, n].substitute(diag)
            rhs = Polynomial()
            for j in range(n + 1):
                rhs = rhs + W.gens[k, n - j, j]
            if lhs != rhs:
                return False
    return True


def w1_product_check(source: AffineIdealInput) -> bool:
    """Generator-level comparison of the first wedge scheme with two 1-jet copies.

    ``x_(0,0) -> x_(0)``, ``x_(1,0) -> x_s(1)``, ``x_(0,1) -> x_t(1)``; the
    renamed wedge generators must coincide with the union of the first jet
    generators over the ``s`` copy and over the ``t`` copy.
    """
    W = build_wedge_ideal(source, 1)
    rename = {}
    for v in source.ambient_vars:
        rename[wedge(v.base, 0, 0)] = jet(v.base, 0)
        rename[wedge(v.base, 1, 0)] = jet(v.base, 1, "s")
        rename[wedge(v.base, 0, 1)] = jet(v.base, 1, "t")
    lhs = {g.rename(rename) for g in W.flat()}
    rhs = set()
    for f in source.generators:
        for copy in ("s", "t"):
            g0, g1 = jet_coefficients(f, source.ambient_vars, 1, copy)
            # the base point is shared between the copies
            shared = {jet(v.base, 0, copy): jet(v.base, 0) for v in source.ambient_vars}
            rhs.update(g.rename(shared) for g in (g0, g1) if g)
    return lhs == rhs
