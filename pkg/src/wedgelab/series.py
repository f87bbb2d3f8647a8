"""Truncated bivariate series over polynomial coefficients.

Elements of ``R[s,t]/(s,t)^(m+1)`` are stored as ``{(i, j): Polynomial}``.
Anything of total (s,t)-degree above ``m`` is dropped as soon as it is
produced, never materialised and discarded later.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .polynomial import Polynomial, Variable, wedge

__all__ = [
    "TruncatedSeries",
    "series_mul",
    "substitute_truncated",
    "generic_image",
    "wedge_indices",
]


def wedge_indices(m: int) -> list:
    """All ``(i, j)`` with ``i + j <= m`` in graded order (x00, x10, x01, x20, ...)."""
    return [(d - j, j) for d in range(m + 1) for j in range(d + 1)]


class TruncatedSeries:
    __slots__ = ("m", "_coeffs")

    def __init__(self, m: int, coeffs: Mapping | None = None):
        if m < 0:
            raise ValueError("truncation order must be >= 0")
        self.m = m
        self._coeffs = {}
        for (i, j), c in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative series index {(i, j)}")
            if i + j > m:
                continue
            c = Polynomial._coerce(c)
            if c:
                self._coeffs[i, j] = c

    @classmethod
    def one(cls, m: int) -> "TruncatedSeries":
        return cls(m, {(0, 0): Polynomial.constant(1)})

    @classmethod
    def s(cls, m: int) -> "TruncatedSeries":
        return cls(m, {(1, 0): Polynomial.constant(1)})

    @classmethod
    def t(cls, m: int) -> "TruncatedSeries":
        return cls(m, {(0, 1): Polynomial.constant(1)})

    @property
    def coeffs(self) -> dict:
        return self._coeffs

    def __getitem__(self, ij) -> Polynomial:
        return self._coeffs.get(tuple(ij), Polynomial())

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.m != self.m:
            raise ValueError(f"truncation orders differ: {self.m} vs {other.m}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out[k] + c if k in out else c
        return TruncatedSeries(self.m, out)

    def __mul__(self, other):
        if isinstance(other, (Polynomial, int)):
            other = Polynomial._coerce(other)
            return TruncatedSeries(self.m, {k: c * other for k, c in self._coeffs.items()})
        return series_mul(self, other)

    def __pow__(self, n: int) -> "TruncatedSeries":
        result = TruncatedSeries.one(self.m)
        base = self
        while n:
            if n & 1:
                result = series_mul(result, base)
            n >>= 1
            if n:
                base = series_mul(base, base)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.m == other.m and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {c}" for k, c in sorted(self._coeffs.items()))
        return f"TruncatedSeries(m={self.m}, {{{body}}})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    m = a.m
    acc: dict = {}
    for (p, q), ca in a._coeffs.items():
        room = m - p - q
        for (u, v), cb in b._coeffs.items():
            if u + v > room:
                continue
            key = (p + u, q + v)
            prod = ca * cb
            acc[key] = acc[key] + prod if key in acc else prod
    out = TruncatedSeries(m)
    out._coeffs = {k: c for k, c in acc.items() if c}
    return out


def generic_image(v: Variable, m: int) -> TruncatedSeries:
    """``x -> sum x_(i,j) s^i t^j`` over ``i + j <= m``."""
    return TruncatedSeries(m, {ij: Polynomial.var(wedge(v.base, *ij)) for ij in wedge_indices(m)})


def substitute_truncated(f: Polynomial, images: Mapping, m: int) -> TruncatedSeries:
    """Image of ``f`` under ``x -> images[x]``, truncating at every product.

    ``images`` maps each plain variable of ``f`` to a series of order ``m``.
    """
    for v in f.variables():
        if v not in images:
            raise KeyError(f"no image given for variable {v}")
        if images[v].m != m:
            raise ValueError(f"image of {v} has order {images[v].m}, expected {m}")
    powers: dict = {}
    total = TruncatedSeries(m)
    for mono, c in f.items():
        term = TruncatedSeries(m, {(0, 0): Polynomial.constant(c)})
        for v, e in mono:
            if (v, e) not in powers:
                powers[v, e] = images[v] ** e
            term = series_mul(term, powers[v, e])
            if term.is_zero():
                break
        total = total + term
    return total


def generic_images(variables: Iterable[Variable], m: int) -> dict:
    return {v: generic_image(v, m) for v in variables}
