"""Exact multivariate polynomials over the rationals.

Variables carry an optional superscript: none (plain coordinates of the
input ring), a single jet index ``x_(n)``, or a wedge pair ``x_(i,j)``.
Polynomials are immutable; the zero coefficient is never stored, so two
polynomials are equal exactly when their term dictionaries are equal.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "Variable",
    "Monomial",
    "Polynomial",
    "plain",
    "jet",
    "wedge",
    "poly_arith",
]

Coefficient = Union[int, Fraction]

_KIND_RANK = {"plain": 0, "jet": 1, "wedge": 2}


def _normalize(c) -> Coefficient:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"unsupported coefficient {c!r}; use int or Fraction")


@functools.total_ordering
@dataclass(frozen=True, eq=False, repr=False)
class Variable:
    """A coordinate, possibly decorated with a jet or wedge superscript.

    ``copy`` distinguishes several jet copies sharing a base point (used
    when comparing the first wedge scheme with a fibre product of jets).
    """

    base: str
    kind: str = "plain"
    index: tuple = ()
    copy: str = ""
    key: tuple = field(init=False, repr=False, compare=False)
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in _KIND_RANK:
            raise ValueError(f"unknown variable kind {self.kind!r}")
        arity = {"plain": 0, "jet": 1, "wedge": 2}[self.kind]
        if len(self.index) != arity or any(
            not isinstance(k, int) or k < 0 for k in self.index
        ):
            raise ValueError(f"bad superscript {self.index!r} for {self.kind} variable")
        if self.kind == "wedge":
            i, j = self.index
            order = (i + j, -i)
        else:
            order = self.index
        key = (self.base, _KIND_RANK[self.kind], order, self.copy)
        object.__setattr__(self, "key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Variable):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Variable") -> bool:
        return self.key < other.key

    @property
    def weight(self) -> int:
        """Total superscript (``n`` for jets, ``i+j`` for wedges, 0 if plain)."""
        return sum(self.index)

    def __repr__(self) -> str:
        return f"Variable({str(self)!r})"

    def __str__(self) -> str:
        if self.kind == "plain":
            return self.base
        inner = ",".join(str(k) for k in self.index)
        return f"{self.base}_{self.copy}({inner})"


def plain(name: str) -> Variable:
    return Variable(name)


def jet(name: str, n: int, copy: str = "") -> Variable:
    return Variable(name, "jet", (n,), copy)


def wedge(name: str, i: int, j: int) -> Variable:
    return Variable(name, "wedge", (i, j))


class Monomial(tuple):
    """Power product stored as ``((var, exp), ...)`` sorted by variable order."""

    __slots__ = ()

    def __new__(cls, items: Iterable = ()):
        acc: dict = {}
        for v, e in items:
            if e < 0:
                raise ValueError("negative exponent")
            if e:
                acc[v] = acc.get(v, 0) + e
        return tuple.__new__(cls, sorted(acc.items(), key=lambda ve: ve[0].key))

    @classmethod
    def _raw(cls, items) -> "Monomial":
        return tuple.__new__(cls, items)

    @classmethod
    def of(cls, *variables: Variable) -> "Monomial":
        return cls((v, 1) for v in variables)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self)

    @property
    def variables(self) -> tuple:
        return tuple(v for v, _ in self)

    def exponent(self, v: Variable) -> int:
        for w, e in self:
            if w == v:
                return e
        return 0

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not self:
            return other
        if not other:
            return self
        out = []
        a, b = self, other
        i = j = 0
        na, nb = len(a), len(b)
        while i < na and j < nb:
            va, ea = a[i]
            vb, eb = b[j]
            ka, kb = va.key, vb.key
            if ka == kb:
                out.append((va, ea + eb))
                i += 1
                j += 1
            elif ka < kb:
                out.append(a[i])
                i += 1
            else:
                out.append(b[j])
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return Monomial._raw(out)

    def __pow__(self, n: int) -> "Monomial":
        if n < 0:
            raise ValueError("negative exponent")
        return Monomial._raw([(v, e * n) for v, e in self] if n else [])

    def divides(self, other: "Monomial") -> bool:
        exps = dict(other)
        return all(exps.get(v, 0) >= e for v, e in self)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        exps = dict(self)
        for v, e in other:
            left = exps.get(v, 0) - e
            if left < 0:
                raise ValueError(f"{other} does not divide {self}")
            exps[v] = left
        return Monomial(exps.items())

    def lcm(self, other: "Monomial") -> "Monomial":
        exps = dict(self)
        for v, e in other:
            exps[v] = max(exps.get(v, 0), e)
        return Monomial(exps.items())

    def support(self) -> "Monomial":
        """Square-free part (product of the distinct variables)."""
        return Monomial._raw([(v, 1) for v, _ in self])

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self)

    def __str__(self) -> str:
        if not self:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self)

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


def _graded_lex_cmp(a: Monomial, b: Monomial) -> int:
    # graded first; ties broken lexicographically with earlier variables dominant
    da, db = a.degree, b.degree
    if da != db:
        return -1 if da < db else 1
    for (va, ea), (vb, eb) in zip(a, b):
        if va != vb:
            return 1 if va.key < vb.key else -1
        if ea != eb:
            return -1 if ea < eb else 1
    return (len(a) > len(b)) - (len(a) < len(b))


monomial_sort_key = functools.cmp_to_key(_graded_lex_cmp)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for mono, c in items:
            if not isinstance(mono, Monomial):
                mono = Monomial(mono)
            acc[mono] = acc.get(mono, 0) + c
        self._terms = {m: _normalize(c) for m, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _from_dict(cls, d: dict) -> "Polynomial":
        p = object.__new__(cls)
        p._terms = d
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Coefficient) -> "Polynomial":
        return cls({Monomial(): c})

    @classmethod
    def var(cls, v: Variable) -> "Polynomial":
        return cls._from_dict({Monomial._raw(((v, 1),)): 1})

    @classmethod
    def monomial(cls, mono: Monomial, c: Coefficient = 1) -> "Polynomial":
        return cls({mono: c})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        """Read-only view ``{Monomial: coefficient}`` (do not mutate)."""
        return self._terms

    def items(self):
        return self._terms.items()

    def sorted_terms(self) -> list:
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda mc: monomial_sort_key(mc[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator:
        return iter(self._terms.items())

    @property
    def degree(self) -> int:
        return max((m.degree for m in self._terms), default=-1)

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def coefficient(self, mono: Monomial) -> Coefficient:
        return self._terms.get(mono, 0)

    def constant_term(self) -> Coefficient:
        return self._terms.get(Monomial(), 0)

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        if isinstance(other, Variable):
            return Polynomial.var(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        acc = dict(self._terms)
        for m, c in other._terms.items():
            s = acc.get(m, 0) + c
            if s:
                acc[m] = _normalize(s)
            else:
                acc.pop(m, None)
        return Polynomial._from_dict(acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_dict({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial._from_dict({m: _normalize(c) for m, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: Coefficient) -> "Polynomial":
        if c == 0:
            return Polynomial()
        return Polynomial._from_dict({m: _normalize(v * c) for m, v in self._terms.items()})

    def __truediv__(self, c):
        if isinstance(c, Polynomial):
            if not c.is_constant() or c.is_zero():
                raise ZeroDivisionError("division only by nonzero constants")
            c = c.constant_term()
        return self.scale(Fraction(1) / Fraction(c))

    def substitute(self, images: Mapping) -> "Polynomial":
        """Replace variables by polynomials; unmapped variables stay put."""
        out = Polynomial()
        cache: dict = {}
        for mono, c in self._terms.items():
            term = Polynomial.constant(c)
            rest = []
            for v, e in mono:
                if v in images:
                    img = images[v]
                    if (v, e) not in cache:
                        cache[v, e] = Polynomial._coerce(img) ** e
                    term = term * cache[v, e]
                else:
                    rest.append((v, e))
            if rest:
                term = term * Polynomial.monomial(Monomial(rest))
            out = out + term
        return out

    def rename(self, mapping: Mapping) -> "Polynomial":
        """Apply an injective variable renaming ``{Variable: Variable}``."""
        return Polynomial(
            (Monomial((mapping.get(v, v), e) for v, e in mono), c)
            for mono, c in self._terms.items()
        )

    def evaluate(self, point: Mapping, modulus: int | None = None):
        """Evaluate at ``point``; with ``modulus`` arithmetic is done mod a prime."""
        total = 0
        for mono, c in self._terms.items():
            val = c
            if modulus is not None and isinstance(c, Fraction):
                val = c.numerator * pow(c.denominator, -1, modulus) % modulus
            for v, e in mono:
                x = point[v]
                if not x:
                    val = 0
                    break
                val = val * (x if e == 1 else x**e)
                if modulus is not None:
                    val %= modulus
            if val:
                total += val
        if modulus is not None:
            return total % modulus
        return _normalize(total) if isinstance(total, Fraction) else total

    # -- comparison / display --------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sort_key(self):
        """Deterministic ordering key for sets of polynomials."""
        return [(monomial_sort_key(m), c) for m, c in self.sorted_terms()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for idx, (mono, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = str(mono)
            else:
                body = f"{a}*{mono}"
            if idx == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Dispatch ``add``, ``sub`` or ``mul``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")
