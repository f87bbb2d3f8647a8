import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from wedgelab.components import (
    MonomialHypersurface,
    StaircasePrime,
    component_report,
    enumerate_minimal_primes,
    lci_verdict,
    order_profile,
    radical_generators,
    radical_monomial_scheme,
    reduced_minimal_primes,
    wedge_space_dim,
    witness_point,
)
from wedgelab.monomial_ideals import MonomialIdeal, intersect_all, minimal_primes_squarefree, prime_contains
from wedgelab.oracle import brute_force_minimal_primes
from wedgelab.parsing import parse_polynomial as P
from wedgelab.polynomial import wedge


def ts(a, m, N=0):
    return [p.t for p in enumerate_minimal_primes(MonomialHypersurface(a, N), m)]


class TestHypersurface:
    def test_defaults(self):
        X = MonomialHypersurface((2, 1))
        assert X.N == 2 and X.names == ("x", "y") and X.r == 2 and not X.reduced
        assert X.polynomial() == P("x^2*y")

    def test_many_variables(self):
        assert MonomialHypersurface((1,) * 5).names == ("x1", "x2", "x3", "x4", "x5")

    @pytest.mark.parametrize("a, N", [((), 0), ((0, 1), 0), ((1, 1), 1), ((-1,), 0)])
    def test_rejects(self, a, N):
        with pytest.raises(ValueError):
            MonomialHypersurface(a, N)


class TestEnumeration:
    def test_xy_m1(self):
        assert ts((1, 1), 1) == [(2, 0), (1, 1), (0, 2)]

    def test_xy_m1_prime_generators(self):
        X = MonomialHypersurface((1, 1))
        got = {frozenset(map(str, p.variables(X.names))) for p in enumerate_minimal_primes(X, 1)}
        assert got == {
            frozenset({"x_(0,0)", "y_(0,0)"}),
            frozenset({"x_(0,0)", "x_(1,0)", "x_(0,1)"}),
            frozenset({"y_(0,0)", "y_(1,0)", "y_(0,1)"}),
        }

    def test_xyz_m2_heights(self):
        X = MonomialHypersurface((1, 1, 1))
        heights = [component_report(p, X, 2).height for p in enumerate_minimal_primes(X, 2)]
        assert len(heights) == 10 and set(heights) == {3, 4, 6}
        assert heights.count(6) == 3 and heights.count(4) == 6 and heights.count(3) == 1

    def test_nonreduced(self):
        assert ts((1, 2), 2) == [(3, 0), (1, 1), (0, 2)]
        assert ts((2, 1), 2) == [(2, 0), (1, 1), (0, 3)]
        assert ts((3,), 4) == [(2,)]

    def test_m0(self):
        assert ts((1, 1, 1), 0) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

    def test_extra_ambient_variables_change_dims_only(self):
        X = MonomialHypersurface((1, 1), 3)
        reps = [component_report(p, X, 1) for p in enumerate_minimal_primes(X, 1)]
        assert [r.dim for r in reps] == [6, 7, 6]

    @pytest.mark.parametrize("r", range(1, 6))
    @pytest.mark.parametrize("m", range(7))
    def test_reduced_counts(self, r, m):
        got = ts((1,) * r, m)
        assert len(got) == comb(m + r, r - 1) and all(sum(t) == m + 1 for t in got)
        assert sorted(got) == sorted(p.t for p in reduced_minimal_primes(r, m))

    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.integers(1, 4), min_size=1, max_size=4), st.integers(0, 5))
    def test_against_brute_force(self, a, m):
        assert set(ts(a, m)) == brute_force_minimal_primes(a, m)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(1, 3), min_size=1, max_size=3), st.integers(0, 4))
    def test_antichain_of_feasible_tuples(self, a, m):
        got = ts(a, m)
        assert all(sum(e * x for e, x in zip(a, t)) >= m + 1 for t in got)
        assert not any(s != t and all(x <= y for x, y in zip(s, t)) for s in got for t in got)
        assert len(set(got)) == len(got)


class TestStaircasePrime:
    def test_height_and_str(self):
        p = StaircasePrime(2, (2, 1, 0))
        assert p.height == 4 and str(p) == "(2,1,0)"
        assert len(p.variables("xyz")) == 4

    def test_range(self):
        with pytest.raises(ValueError):
            StaircasePrime(1, (3, 0))

    def test_report_rejects_infeasible(self):
        X = MonomialHypersurface((1, 1))
        with pytest.raises(ValueError):
            component_report(StaircasePrime(2, (1, 1)), X, 2)
        with pytest.raises(ValueError):
            component_report(StaircasePrime(1, (1, 1)), X, 2)

    def test_dim(self):
        X = MonomialHypersurface((1, 1))
        assert component_report(StaircasePrime(1, (1, 1)), X, 1).dim == wedge_space_dim(2, 1) - 2 == 4


class TestRadical:
    def test_xy_m1(self):
        got = {str(g) for g in radical_generators(MonomialHypersurface((1, 1)), 1)}
        assert got == {"x_(0,0)*y_(0,0)", "x_(0,0)*y_(1,0)", "x_(1,0)*y_(0,0)", "x_(0,0)*y_(0,1)", "x_(0,1)*y_(0,0)"}

    def test_linear_m2(self):
        assert len(radical_generators(MonomialHypersurface((1,)), 2)) == 6

    def test_square_m1(self):
        # x^2: terms x00^2, x00*x10, x00*x01 -> radical (x00)
        assert {str(g) for g in radical_generators(MonomialHypersurface((2,)), 1)} == {"x_(0,0)"}

    def test_generated_by_supports_of_wedge_terms(self):
        for a, m in [((1, 1), 2), ((2, 1), 2), ((1, 2, 1), 1), ((3,), 3)]:
            X = MonomialHypersurface(a)
            supports = MonomialIdeal(mono.support() for g in X.wedge_ideal(m).flat() for mono in g.terms)
            assert supports == radical_generators(X, m)

    @pytest.mark.parametrize("a", [(1, 1), (2, 1), (1, 1, 1), (2, 2), (1, 2, 2)])
    @pytest.mark.parametrize("m", range(4))
    def test_decomposition(self, a, m):
        X = MonomialHypersurface(a)
        rad = radical_generators(X, m)
        expanded = {p.expand(X.names) for p in enumerate_minimal_primes(X, m)}
        assert intersect_all(p.as_ideal() for p in expanded) == rad
        assert minimal_primes_squarefree(rad) == expanded

    def test_multi_monomial(self):
        # V(xy, yz) = V(y) u V(x, z); m=0 radical is (x00*y00, y00*z00)
        got = {str(g) for g in radical_monomial_scheme([(1, 1, 0), (0, 1, 1)], 0)}
        assert got == {"x_(0,0)*y_(0,0)", "y_(0,0)*z_(0,0)"}

    def test_multi_monomial_linear(self):
        got = radical_monomial_scheme([(1, 0), (0, 1)], 1)
        assert {str(g) for g in got} == {f"{n}_({i},{j})" for n in "xy" for i, j in [(0, 0), (1, 0), (0, 1)]}

    def test_multi_monomial_single_matches_hypersurface(self):
        assert radical_monomial_scheme([(2, 1)], 2) == radical_generators(MonomialHypersurface((2, 1)), 2)

    def test_multi_monomial_validation(self):
        with pytest.raises(ValueError):
            radical_monomial_scheme([], 1)
        with pytest.raises(ValueError):
            radical_monomial_scheme([(1, 1), (1,)], 1)
        assert radical_monomial_scheme([(0, 0)], 1).is_unit()


class TestLci:
    def test_xy_plane_m1(self):
        v = lci_verdict(MonomialHypersurface((1, 1), 2), 1)
        assert (v.dim, v.expected_dim, v.pure_dimensional, v.irreducible) == (4, 3, False, False)
        assert v.component_dims == (3, 4, 3)

    def test_smooth_line(self):
        v = lci_verdict(MonomialHypersurface((1,), 2), 3)
        assert v.dim == v.expected_dim == wedge_space_dim(1, 3) and v.pure_dimensional and v.irreducible

    def test_point(self):
        v = lci_verdict(MonomialHypersurface((1,)), 2)
        assert v.dim == 0 and v.expected_dim == 0 and v.irreducible

    def test_double_line_m0(self):
        v = lci_verdict(MonomialHypersurface((2,), 2), 0)
        assert v.dim == 1 == v.expected_dim and v.pure_dimensional

    @pytest.mark.parametrize("a, N, m", [((1, 1), 2, 2), ((1, 1, 1), 3, 1), ((2, 1), 3, 2), ((1,), 3, 4)])
    def test_criterion_flag(self, a, N, m):
        v = lci_verdict(MonomialHypersurface(a, N), m)
        assert v.dim == max(v.component_dims) and v.dim >= v.expected_dim
        assert v.matches_dimension_criterion


class TestProfiles:
    def test_order_profile(self):
        X = MonomialHypersurface((1, 1))
        pt = {wedge(n, i, j): 0 for n in "xy" for i, j in [(0, 0), (1, 0), (0, 1)]}
        pt[wedge("x", 0, 1)] = 5
        assert order_profile(pt, X, 1) == (1, 2)

    def test_zero_point_has_maximal_orders(self):
        X = MonomialHypersurface((1, 1, 1))
        zero = {wedge(n, i, j): 0 for n in "xyz" for i in range(3) for j in range(3 - i)}
        assert order_profile(zero, X, 2) == (3, 3, 3)

    def test_missing_variable(self):
        with pytest.raises(KeyError):
            order_profile({}, MonomialHypersurface((1,)), 0)

    @pytest.mark.parametrize("a, m", [((1, 1), 3), ((2, 1, 1), 2), ((1, 3), 4)])
    def test_witness_points_have_the_prime_profile(self, a, m):
        X = MonomialHypersurface(a)
        gens = X.wedge_ideal(m).flat()
        rng = random.Random(1)
        for p in enumerate_minimal_primes(X, m):
            pt = witness_point(p, X, m, fill=rng.randrange(1, 97))
            assert order_profile(pt, X, m) == p.t
            assert all(g.evaluate(pt) == 0 for g in gens)
            assert all(prime_contains(p.expand(X.names), g) for g in gens)

    def test_off_component_point_does_not_vanish(self):
        X = MonomialHypersurface((1, 1))
        pt = witness_point(StaircasePrime(1, (1, 0)), X, 1)
        assert order_profile(pt, X, 1) == (1, 0)
        assert any(g.evaluate(pt) for g in X.wedge_ideal(1).flat())
