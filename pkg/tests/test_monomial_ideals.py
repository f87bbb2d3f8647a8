import itertools

import pytest
from hypothesis import given, settings, strategies as st

from wedgelab.monomial_ideals import (
    MonomialIdeal,
    VariablePrime,
    intersect,
    intersect_all,
    minimal_primes_squarefree,
    minimalize,
    prime_contains,
    radical_monomial,
    sum_radical,
)
from wedgelab.parsing import parse_polynomial as P
from wedgelab.polynomial import Monomial, plain

V = [plain(c) for c in "abcdef"]
a, b, c, d, e, f = V


def M(*vs):
    return Monomial.of(*vs)


def ideal(*monos):
    return MonomialIdeal(monos)


def prime(*vs):
    return VariablePrime(vs)


def brute_minimal_primes(I):
    """All variable subsets meeting every support, then minimal ones."""
    vs = sorted(I.variables())
    covers = [
        frozenset(s)
        for k in range(len(vs) + 1)
        for s in itertools.combinations(vs, k)
        if all(any(v in s for v, _ in g) for g in I.gens)
    ]
    return {VariablePrime(s) for s in covers if not any(o < s for o in covers)}


monomials = st.lists(st.tuples(st.sampled_from(V), st.integers(1, 3)), min_size=1, max_size=3).map(
    lambda pairs: Monomial.of(*[v for v, k in pairs for _ in range(k)])
)
ideals = st.lists(monomials, min_size=1, max_size=5).map(MonomialIdeal)
sqfree = st.lists(
    st.sets(st.sampled_from(V), min_size=1, max_size=3).map(lambda s: Monomial.of(*s)), min_size=1, max_size=6
).map(MonomialIdeal)


class TestMinimalize:
    def test_drops_multiples(self):
        assert ideal(M(a), M(a, b), M(a, a), M(b, c)).gens == {M(a), M(b, c)}

    def test_duplicates(self):
        assert minimalize([M(a, b), M(b, a)]) == ideal(M(a, b))

    def test_unit_absorbs(self):
        I = ideal(M(), M(a))
        assert I.is_unit() and I.gens == {Monomial()}

    def test_zero(self):
        assert MonomialIdeal().is_zero() and not MonomialIdeal().is_unit()

    def test_contains(self):
        I = ideal(M(a, a), M(b, c))
        assert I.contains_monomial(M(a, a, d))
        assert not I.contains_monomial(M(a, b))

    @settings(max_examples=100, deadline=None)
    @given(ideals)
    def test_antichain_and_idempotent(self, I):
        gens = list(I.gens)
        assert not any(g.divides(h) for g in gens for h in gens if g != h)
        assert minimalize(gens) == I


class TestRadical:
    def test_example(self):
        assert radical_monomial(ideal(M(a, a, b), M(c, c, c))) == ideal(M(a, b), M(c))

    def test_zero_and_unit(self):
        assert radical_monomial(MonomialIdeal()).is_zero()
        assert radical_monomial(ideal(M())).is_unit()

    @settings(max_examples=100, deadline=None)
    @given(ideals)
    def test_idempotent_and_squarefree(self, I):
        R = radical_monomial(I)
        assert R.is_squarefree()
        assert radical_monomial(R) == R
        assert all(R.contains_monomial(g) for g in I.gens)

    def test_sum_radical(self):
        assert sum_radical([ideal(M(a, a)), ideal(M(a, b), M(c, c))]) == ideal(M(a), M(c))


class TestIntersect:
    def test_example(self):
        assert intersect(ideal(M(a)), ideal(M(b))) == ideal(M(a, b))
        assert intersect(ideal(M(a), M(b)), ideal(M(a), M(c))) == ideal(M(a), M(b, c))
        assert intersect(ideal(M(a), M(b)), ideal(M(a))) == ideal(M(a))

    def test_three_primes_of_the_node(self):
        from wedgelab.polynomial import wedge

        x = [wedge("x", i, j) for i, j in [(0, 0), (1, 0), (0, 1)]]
        y = [wedge("y", i, j) for i, j in [(0, 0), (1, 0), (0, 1)]]
        inter = intersect_all([prime(x[0], y[0]).as_ideal(), prime(*x).as_ideal(), prime(*y).as_ideal()])
        assert {str(g) for g in inter} == {"x_(0,0)*y_(0,0)", "x_(0,0)*y_(1,0)", "x_(0,0)*y_(0,1)",
                                           "x_(1,0)*y_(0,0)", "x_(0,1)*y_(0,0)"}

    def test_empty_family_is_unit(self):
        assert intersect_all([]).is_unit()

    @settings(max_examples=60, deadline=None)
    @given(ideals, ideals, monomials)
    def test_membership(self, I, J, u):
        assert intersect(I, J).contains_monomial(u) == (I.contains_monomial(u) and J.contains_monomial(u))


class TestMinimalPrimes:
    def test_triangle(self):
        I = ideal(M(a, b), M(b, c), M(a, c))
        assert minimal_primes_squarefree(I) == {prime(a, b), prime(b, c), prime(a, c)}

    def test_single_generator(self):
        assert minimal_primes_squarefree(ideal(M(a, b, c))) == {prime(a), prime(b), prime(c)}

    def test_variables(self):
        assert minimal_primes_squarefree(ideal(M(a), M(b))) == {prime(a, b)}

    def test_edge_cases(self):
        assert minimal_primes_squarefree(ideal(M())) == set()
        assert minimal_primes_squarefree(MonomialIdeal()) == {prime()}

    def test_rejects_non_squarefree(self):
        with pytest.raises(ValueError):
            minimal_primes_squarefree(ideal(M(a, a)))

    @settings(max_examples=150, deadline=None)
    @given(sqfree)
    def test_against_brute_force(self, I):
        assert minimal_primes_squarefree(I) == brute_minimal_primes(I)

    @settings(max_examples=100, deadline=None)
    @given(sqfree)
    def test_decomposition(self, I):
        primes = minimal_primes_squarefree(I)
        assert intersect_all(p.as_ideal() for p in primes) == I


class TestPrimeContains:
    def test_per_term(self):
        assert prime_contains({plain("x")}, P("x*y + 3*x^2"))
        assert not prime_contains({plain("x")}, P("x*y + y"))
        assert prime_contains({plain("x")}, P("0"))

    @settings(max_examples=100, deadline=None)
    @given(ideals, st.sets(st.sampled_from(V), max_size=4))
    def test_agrees_with_ideal_containment(self, I, vs):
        from wedgelab.polynomial import Polynomial

        gens_in = all(prime_contains(vs, Polynomial.monomial(g)) for g in I.gens)
        # for a monomial ideal, P contains I iff some variable of each generator lies in P
        covered = all(any(v in vs for v, _ in g) for g in I.gens)
        assert gens_in == covered
        if gens_in:
            assert any(p <= vs for p in minimal_primes_squarefree(radical_monomial(I)))
