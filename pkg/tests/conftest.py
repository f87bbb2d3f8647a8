import sympy as sp
import pytest
from hypothesis import strategies as st

from wedgelab.polynomial import Monomial, Polynomial, plain


def sym(v):
    """sympy symbol with the same printed name as a Variable."""
    return sp.Symbol(str(v))


def to_sympy(p: Polynomial):
    expr = sp.Integer(0)
    for mono, c in p.items():
        term = sp.Rational(c.numerator, c.denominator) if hasattr(c, "denominator") else sp.Integer(c)
        for v, e in mono:
            term *= sym(v) ** e
        expr += term
    return sp.expand(expr)


def sympy_wedge_coefficients(f_text: str, names, m: int) -> dict:
    """Independent route: expand f(sum x_(i,j) s^i t^j) with sympy and read off
    coefficients of s^i t^j, i+j <= m."""
    s, t = sp.symbols("s t")
    subs = {}
    for n in names:
        subs[sp.Symbol(n)] = sum(
            sp.Symbol(f"{n}_({i},{d - i})") * s**i * t ** (d - i) for d in range(m + 1) for i in range(d, -1, -1)
        )
    expr = sp.expand(sp.sympify(f_text.replace("^", "**")).subs(subs, simultaneous=True))
    poly = sp.Poly(expr, s, t)
    out = {}
    for (i, j), c in zip(poly.monoms(), poly.coeffs()):
        if i + j <= m:
            out[i, j] = sp.expand(c)
    return out


VARS = [plain(c) for c in "xyz"]


@st.composite
def polynomials(draw, variables=VARS, max_terms=4, max_deg=3, rational=True):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        exps = draw(st.lists(st.integers(0, max_deg), min_size=len(variables), max_size=len(variables)))
        coef = draw(st.fractions(min_value=-5, max_value=5, max_denominator=4) if rational else st.integers(-5, 5))
        terms[Monomial(zip(variables, exps))] = terms.get(Monomial(zip(variables, exps)), 0) + coef
    return Polynomial(terms)


@pytest.fixture
def xy_w1():
    from wedgelab.components import MonomialHypersurface

    return MonomialHypersurface((1, 1)).wedge_ideal(1)
