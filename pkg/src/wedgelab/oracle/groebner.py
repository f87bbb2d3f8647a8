"""A small Buchberger engine over the rationals.

This exists to check other code, so it favours being obviously right:
plain Buchberger with the coprime and chain criteria, normal selection,
and a hard cap on the number of S-polynomials reduced.  Polynomials are
converted to ``{exponent tuple: Fraction}`` over a fixed variable list;
the first variable in canonical order is the largest.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..polynomial import Monomial, Polynomial, Variable

DEFAULT_BUDGET = 5000

_ELIM = Variable("elimination_t")


class BudgetExceeded(RuntimeError):
    """Raised instead of returning an answer when the S-pair budget runs out."""


def _grevlex(e: tuple) -> tuple:
    return (sum(e), tuple(-x for x in reversed(e)))


def _order_key(order: str, n_elim: int):
    if order == "grevlex":
        return _grevlex
    if order == "elim":
        return lambda e: (_grevlex(e[:n_elim]), _grevlex(e[n_elim:]))
    raise ValueError(f"unknown monomial order {order!r}")


class _Ring:
    def __init__(self, variables: Sequence[Variable], order: str = "grevlex", n_elim: int = 0):
        self.variables = tuple(variables)
        self.pos = {v: i for i, v in enumerate(self.variables)}
        self.key = _order_key(order, n_elim)
        self.n = len(self.variables)

    def to_dict(self, f: Polynomial) -> dict:
        out = {}
        for mono, c in f.items():
            e = [0] * self.n
            for v, k in mono:
                e[self.pos[v]] = k
            out[tuple(e)] = Fraction(c)
        return out

    def to_poly(self, d: dict) -> Polynomial:
        return Polynomial(
            (Monomial((v, k) for v, k in zip(self.variables, e) if k), c) for e, c in d.items()
        )

    def lead(self, d: dict) -> tuple:
        return max(d, key=self.key)


def _sub_scaled(f: dict, g: dict, c: Fraction, shift: tuple) -> dict:
    """``f - c * x^shift * g`` (new dict)."""
    out = dict(f)
    for e, a in g.items():
        k = tuple(x + y for x, y in zip(e, shift))
        v = out.get(k, 0) - c * a
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _reduce(f: dict, basis: list, leads: list, ring: _Ring) -> dict:
    """Full normal form of ``f`` modulo ``basis`` (each monic, leads precomputed)."""
    rem = {}
    f = dict(f)
    while f:
        lt = ring.lead(f)
        c = f[lt]
        for g, lg in zip(basis, leads):
            if _divides(lg, lt):
                f = _sub_scaled(f, g, c, tuple(x - y for x, y in zip(lt, lg)))
                break
        else:
            rem[lt] = c
            del f[lt]
    return rem


def _monic(f: dict, ring: _Ring) -> dict:
    c = f[ring.lead(f)]
    return {e: a / c for e, a in f.items()}


class GroebnerBasis:
    """Reduced Groebner basis together with the ring it lives in."""

    def __init__(self, ring: _Ring, basis: list, order: str):
        self._ring = ring
        self._basis = basis
        self._leads = [ring.lead(g) for g in basis]
        self.ordering = order
        self.pairs_reduced = 0

    @property
    def variables(self) -> tuple:
        return self._ring.variables

    @property
    def basis(self) -> list:
        return [self._ring.to_poly(g) for g in self._basis]

    def is_unit(self) -> bool:
        return any(not any(e) for e in self._leads)

    def reduce(self, f: Polynomial) -> Polynomial:
        extra = f.variables() - set(self._ring.variables)
        if extra:
            # variables outside the ring are constants as far as the basis is concerned
            ring = _Ring(self._ring.variables + tuple(sorted(extra)))
            pad = (0,) * len(extra)
            basis = [{e + pad: c for e, c in g.items()} for g in self._basis]
            leads = [lg + pad for lg in self._leads]
            ring.key = _pad_key(self._ring.key, len(self._ring.variables))
            return ring.to_poly(_reduce(ring.to_dict(f), basis, leads, ring))
        return self._ring.to_poly(_reduce(self._ring.to_dict(f), self._basis, self._leads, self._ring))

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def __len__(self) -> int:
        return len(self._basis)


def _pad_key(key, n):
    return lambda e: (key(e[:n]), _grevlex(e[n:]))


def _ring_for(polys: Iterable[Polynomial], variables: Sequence[Variable] | None, elim: Sequence[Variable] = ()):
    if variables is None:
        variables = sorted(set().union(*(p.variables() for p in polys)) - set(elim))
    if elim:
        return _Ring(tuple(elim) + tuple(variables), "elim", len(elim)), "elim"
    return _Ring(variables), "grevlex"


def groebner(
    gens: Sequence[Polynomial],
    variables: Sequence[Variable] | None = None,
    eliminate: Sequence[Variable] = (),
    budget: int = DEFAULT_BUDGET,
) -> GroebnerBasis:
    """Reduced Groebner basis; grevlex, or an elimination order when ``eliminate`` is set."""
    gens = [g for g in gens if not g.is_zero()]
    ring, order = _ring_for(gens, variables, eliminate)
    G = [_monic(ring.to_dict(g), ring) for g in gens]
    leads = [ring.lead(g) for g in G]
    pairs = {(i, j) for j in range(len(G)) for i in range(j)}
    done = 0

    def chain_skip(i, j, L):
        for k, lk in enumerate(leads):
            if k in (i, j) or not _divides(lk, L):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                return True
        return False

    while pairs:
        i, j = min(pairs, key=lambda p: (ring.key(_lcm(leads[p[0]], leads[p[1]])), p))
        pairs.discard((i, j))
        li, lj = leads[i], leads[j]
        L = _lcm(li, lj)
        if all(x == 0 or y == 0 for x, y in zip(li, lj)):
            continue
        if chain_skip(i, j, L):
            continue
        done += 1
        if done > budget:
            raise BudgetExceeded(f"S-pair budget of {budget} exhausted")
        s = _sub_scaled(
            {tuple(x + y for x, y in zip(e, tuple(a - b for a, b in zip(L, li)))): c for e, c in G[i].items()},
            G[j],
            Fraction(1),
            tuple(a - b for a, b in zip(L, lj)),
        )
        h = _reduce(s, G, leads, ring)
        if h:
            h = _monic(h, ring)
            G.append(h)
            leads.append(ring.lead(h))
            n = len(G) - 1
            pairs.update((k, n) for k in range(n))

    # minimal then reduced basis
    keep = []
    for idx, lg in enumerate(leads):
        if any(_divides(leads[o], lg) and (leads[o] != lg or o < idx) for o in range(len(G)) if o != idx):
            continue
        keep.append(idx)
    G = [G[k] for k in keep]
    out = []
    for k, g in enumerate(G):
        others = G[:k] + G[k + 1 :]
        r = _reduce(g, others, [ring.lead(o) for o in others], ring)
        out.append(_monic(r, ring))
    out.sort(key=lambda g: ring.key(ring.lead(g)))
    result = GroebnerBasis(ring, out, order)
    result.pairs_reduced = done
    return result


def groebner_membership(f: Polynomial, gens: Sequence[Polynomial], budget: int = DEFAULT_BUDGET) -> bool:
    variables = sorted(set().union(f.variables(), *(g.variables() for g in gens)))
    return groebner(gens, variables, budget=budget).contains(f)


def ideal_equal(A: Sequence[Polynomial], B: Sequence[Polynomial], budget: int = DEFAULT_BUDGET) -> bool:
    """Equality of ideals by comparing reduced grevlex bases."""
    variables = sorted(set().union(*(g.variables() for g in list(A) + list(B))))
    ga = groebner(A, variables, budget=budget)
    gb = groebner(B, variables, budget=budget)
    return ga.basis == gb.basis


def _exact_divide(h: Polynomial, f: Polynomial, variables: Sequence[Variable]) -> Polynomial:
    ring = _Ring(variables)
    num, den = ring.to_dict(h), ring.to_dict(f)
    ld = ring.lead(den)
    cd = den[ld]
    quot = {}
    while num:
        lt = ring.lead(num)
        if not _divides(ld, lt):
            raise ArithmeticError(f"{f} does not divide {h}")
        shift = tuple(x - y for x, y in zip(lt, ld))
        c = num[lt] / cd
        quot[shift] = quot.get(shift, 0) + c
        num = _sub_scaled(num, den, c, shift)
    return ring.to_poly(quot)


def ideal_quotient(gens: Sequence[Polynomial], f: Polynomial, budget: int = DEFAULT_BUDGET) -> list:
    """Generators of ``(I : f)`` from ``I ∩ (f)``, itself found by eliminating ``T``
    from ``T*I + (1 - T)*f``."""
    if f.is_zero():
        raise ValueError("quotient by zero is the whole ring; refusing")
    variables = sorted(set().union(f.variables(), *(g.variables() for g in gens)))
    T = Polynomial.var(_ELIM)
    system = [T * g for g in gens] + [(1 - T) * f]
    G = groebner(system, variables, eliminate=(_ELIM,), budget=budget)
    inter = [g for g in G.basis if _ELIM not in g.variables()]
    out = [_exact_divide(h, f, variables) for h in inter]
    return groebner(out, variables, budget=budget).basis if out else []
