"""Truncated wedge schemes: defining ideals, components of monomial cases,
and multiplicity-one certificates."""

from .components import (
    ComponentReport,
    LciVerdict,
    MonomialHypersurface,
    StaircasePrime,
    component_report,
    enumerate_minimal_primes,
    lci_verdict,
    order_profile,
    radical_generators,
    radical_monomial_scheme,
    witness_point,
)
from .monomial_ideals import (
    MonomialIdeal,
    VariablePrime,
    intersect,
    minimal_primes_squarefree,
    minimalize,
    prime_contains,
    radical_monomial,
    sum_radical,
)
from .multiplicity import certify, conjecture_sweep, linear_part, paper_evaluation, paper_selection
from .parsing import ParseError, parse_polynomial
from .polynomial import Monomial, Polynomial, Variable, jet, plain, poly_arith, wedge
from .schemes import (
    AffineIdealInput,
    build_jet_ideal,
    build_wedge_ideal,
    diagonal_check,
    w1_product_check,
)
from .series import TruncatedSeries, series_mul, substitute_truncated

__version__ = "0.1.0"

__all__ = [
    "ComponentReport",
    "LciVerdict",
    "MonomialHypersurface",
    "StaircasePrime",
    "component_report",
    "enumerate_minimal_primes",
    "lci_verdict",
    "order_profile",
    "radical_generators",
    "radical_monomial_scheme",
    "witness_point",
    "MonomialIdeal",
    "VariablePrime",
    "intersect",
    "minimal_primes_squarefree",
    "minimalize",
    "prime_contains",
    "radical_monomial",
    "sum_radical",
    "certify",
    "conjecture_sweep",
    "linear_part",
    "paper_evaluation",
    "paper_selection",
    "ParseError",
    "parse_polynomial",
    "Monomial",
    "Polynomial",
    "Variable",
    "jet",
    "plain",
    "poly_arith",
    "wedge",
    "AffineIdealInput",
    "build_jet_ideal",
    "build_wedge_ideal",
    "diagonal_check",
    "w1_product_check",
    "TruncatedSeries",
    "series_mul",
    "substitute_truncated",
]
