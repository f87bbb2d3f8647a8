"""Independent checks: brute-force enumeration, point sampling, Groebner bases."""

from .bruteforce import ScaleError, brute_force_minimal_primes
from .groebner import (
    BudgetExceeded,
    GroebnerBasis,
    groebner,
    groebner_membership,
    ideal_equal,
    ideal_quotient,
)
from .sampling import FieldPoint, random_point, sample_vanishing

__all__ = [
    "ScaleError",
    "brute_force_minimal_primes",
    "BudgetExceeded",
    "GroebnerBasis",
    "groebner",
    "groebner_membership",
    "ideal_equal",
    "ideal_quotient",
    "FieldPoint",
    "random_point",
    "sample_vanishing",
]
