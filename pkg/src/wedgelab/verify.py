"""Self-checks runnable from the command line (``wedgelab verify <suite>``).

Each suite returns a list of :class:`Check` results.  They reproduce the
published examples and cross-check the closed forms against the
independent oracles on small grids.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb

from .components import (
    MonomialHypersurface,
    component_report,
    enumerate_minimal_primes,
    lci_verdict,
    radical_generators,
)
from .monomial_ideals import intersect_all, minimal_primes_squarefree, prime_contains
from .multiplicity import PROVEN, certify, conjecture_sweep
from .oracle import brute_force_minimal_primes, ideal_equal, ideal_quotient, sample_vanishing
from .parsing import parse_polynomial
from .polynomial import Monomial, Polynomial, plain
from .schemes import AffineIdealInput, diagonal_check, w1_product_check

__all__ = ["Check", "SUITES", "run_suite", "embedded_prime_witness", "random_input"]


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def exponent_grid(r_max: int, a_max: int):
    for r in range(1, r_max + 1):
        yield from itertools.product(range(1, a_max + 1), repeat=r)


def embedded_prime_witness(max_degree: int = 2):
    """Search monomials ``h`` (by degree, then variable order) with
    ``(W_1(xy) : h) = (x00, y00, x01*y10 - x10*y01)``.

    Returns ``(h, degree searched)``; ``h`` is ``None`` if nothing up to
    ``max_degree`` works.
    """
    X = MonomialHypersurface((1, 1))
    W = X.wedge_ideal(1).flat()
    target = [parse_polynomial(s) for s in ("x_(0,0)", "y_(0,0)", "x_(0,1)*y_(1,0) - x_(1,0)*y_(0,1)")]
    variables = sorted(set().union(*(g.variables() for g in W)))
    for d in range(1, max_degree + 1):
        for combo in itertools.combinations_with_replacement(variables, d):
            h = Polynomial.monomial(Monomial.of(*combo))
            if ideal_equal(ideal_quotient(W, h), target):
                return h, d
    return None, max_degree


def random_input(rng: random.Random, max_vars: int = 3, max_degree: int = 3) -> AffineIdealInput:
    """One random polynomial with small integer coefficients."""
    n = rng.randint(1, max_vars)
    vs = [plain(c) for c in "xyz"[:n]]
    while True:
        terms = {}
        for _ in range(rng.randint(1, 4)):
            d = rng.randint(1, max_degree)
            exps = [0] * n
            for _ in range(d):
                exps[rng.randrange(n)] += 1
            terms[Monomial(zip(vs, exps))] = rng.choice([-3, -2, -1, 1, 2, 3])
        f = Polynomial(terms)
        if f:
            return AffineIdealInput(tuple(vs), (f,))


def suite_counts():
    out = []
    for N in range(1, 5):
        for m in range(7):
            X = MonomialHypersurface((1,), N)
            W = X.wedge_ideal(m)
            nv = len(W.variables())
            ng = len(W.gens)
            ok = nv == N * (m + 1) * (m + 2) // 2 and ng == (m + 1) * (m + 2) // 2
            out.append(Check(f"counts N={N} m={m}", ok, f"{nv} vars, {ng} generators"))
    return out


def suite_embedded():
    X = MonomialHypersurface((1, 1))
    primes = [P.expand(X.names) for P in enumerate_minimal_primes(X, 1)]
    want = [
        {parse_polynomial(s).variables().pop() for s in group}
        for group in (["x_(0,0)", "y_(0,0)"], ["x_(0,0)", "x_(0,1)", "x_(1,0)"], ["y_(0,0)", "y_(0,1)", "y_(1,0)"])
    ]
    ok = sorted(map(sorted, primes)) == sorted(map(sorted, want))
    h, d = embedded_prime_witness(2)
    if h is None:
        h, d = embedded_prime_witness(3)
    return [
        Check("xy, m=1: three minimal primes", ok, ", ".join(repr(p) for p in primes)),
        Check("xy, m=1: embedded prime is (W_1 : h)", h is not None, f"h = {h}, searched degree <= {d}"),
    ]


def suite_not_pure():
    X = MonomialHypersurface((1, 1, 1))
    reps = [component_report(P, X, 2) for P in enumerate_minimal_primes(X, 2)]
    heights = sorted({r.height for r in reps})
    named = {r.prime.t: r.height for r in reps}
    ok = heights == [3, 4, 6] and len(reps) == 10
    ok = ok and named[(3, 0, 0)] == 6 and named[(2, 1, 0)] == 4 and named[(1, 1, 1)] == 3
    return [Check("xyz, m=2: heights {6,4,3}, 10 primes", ok, f"heights {heights}, {len(reps)} primes")]


def suite_radical():
    bad = []
    for a in exponent_grid(3, 2):
        X = MonomialHypersurface(a)
        for m in range(5):
            inter = intersect_all(P.expand(X.names).as_ideal() for P in enumerate_minimal_primes(X, m))
            if inter != radical_generators(X, m):
                bad.append((a, m))
    return [Check("intersection of primes = radical, r<=3 a<=2 m<=4", not bad, f"failures {bad[:5]}" if bad else "")]


def suite_generic_primes():
    bad = []
    for a in exponent_grid(3, 2):
        X = MonomialHypersurface(a)
        for m in range(5):
            closed = {P.expand(X.names) for P in enumerate_minimal_primes(X, m)}
            if minimal_primes_squarefree(radical_generators(X, m)) != closed:
                bad.append((a, m))
    return [Check("generic minimal primes of radical = staircase primes", not bad, f"failures {bad[:5]}" if bad else "")]


def suite_oracle():
    bad = []
    for a in exponent_grid(4, 3):
        for m in range(5):
            closed = {P.t for P in enumerate_minimal_primes(MonomialHypersurface(a), m)}
            if closed != brute_force_minimal_primes(a, m):
                bad.append((a, m))
    return [Check("closed form = brute force, r<=4 a<=3 m<=4", not bad, f"failures {bad[:5]}" if bad else "")]


def suite_containment(seed: int = 0, q: int = 65521, trials: int = 5):
    rng = random.Random(seed)
    not_in, not_zero, n = [], [], 0
    for a in exponent_grid(4, 3):
        X = MonomialHypersurface(a)
        for m in range(5):
            W = X.wedge_ideal(m)
            gens = W.flat()
            for P in enumerate_minimal_primes(X, m):
                n += 1
                pv = P.expand(X.names)
                if not all(prime_contains(pv, g) for g in gens):
                    not_in.append((a, m, P.t))
                if not sample_vanishing(X, P, m, q, trials, rng, ideal=W):
                    not_zero.append((a, m, P.t))
    return [
        Check("every wedge equation lies in every minimal prime", not not_in, f"{n} primes"),
        Check(f"wedge equations vanish on random points of each component (q={q})", not not_zero, f"{n} primes"),
    ]


def suite_reduced():
    bad = []
    for r in range(1, 6):
        for m in range(7):
            ts = [P.t for P in enumerate_minimal_primes(MonomialHypersurface((1,) * r), m)]
            if any(sum(t) != m + 1 for t in ts) or len(ts) != comb(m + r, r - 1):
                bad.append((r, m))
    return [Check("reduced case: sum t = m+1, count C(m+r, r-1)", not bad, f"failures {bad}" if bad else "")]


def suite_structural(seed: int = 0, n_random: int = 50):
    rng = random.Random(seed)
    bad = []
    for _ in range(n_random):
        src = random_input(rng)
        m = rng.randint(0, 3)
        if not (diagonal_check(src, m) and w1_product_check(src)):
            bad.append(str(src.generators[0]))
    explicit = []
    for text in ("x*y", "x^2*y - z^3"):
        src = AffineIdealInput.from_polynomials([parse_polynomial(text)])
        explicit.append(diagonal_check(src, 3) and w1_product_check(src))
    return [
        Check(f"s=t specialisation and W_1 fibre product on {n_random} random inputs", not bad, ", ".join(bad[:3])),
        Check("same identities for xy and x^2*y - z^3", all(explicit)),
    ]


def suite_multiplicity():
    bad = []
    for r in (2, 3):
        X = MonomialHypersurface((1,) * r)
        for m in range(7):
            W = X.wedge_ideal(m)
            for P in enumerate_minimal_primes(X, m):
                cert = certify(X, P, m, "paper", ideal=W)
                if cert.verdict != PROVEN or abs(cert.det_or_rank) != 1:
                    bad.append((r, m, P.t))
    return [Check("explicit selections give det +-1, r=2,3, m<=6", not bad, f"failures {bad[:5]}" if bad else "")]


def suite_conjecture(seed: int = 0):
    res = conjecture_sweep(4, 5, "randomized", seed=seed)
    bad = [(row.m, row.t) for row in res.rows if row.verdict != PROVEN]
    return [Check("randomized certificates for x*y*z*w, m<=5", not bad, f"{len(res.rows)} components")]


def suite_lci():
    v = lci_verdict(MonomialHypersurface((1, 1), 2), 1)
    ok = v.dim == 4 and v.expected_dim == 3 and not v.pure_dimensional and not v.irreducible
    return [Check("xy in A^2, m=1: dim 4 > 3, not pure, reducible", ok, str(v.as_dict()))]


SUITES = {
    "counts": suite_counts,
    "embedded": suite_embedded,
    "not-pure": suite_not_pure,
    "radical": suite_radical,
    "generic-primes": suite_generic_primes,
    "oracle": suite_oracle,
    "containment": suite_containment,
    "reduced": suite_reduced,
    "structural": suite_structural,
    "multiplicity": suite_multiplicity,
    "conjecture": suite_conjecture,
    "lci": suite_lci,
}


def run_suite(name: str) -> list:
    if name == "all":
        return [c for fn in SUITES.values() for c in fn()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(['all', *SUITES])}")
    return SUITES[name]()
