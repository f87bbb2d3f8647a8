import pytest
from hypothesis import given, settings, strategies as st

from wedgelab.components import MonomialHypersurface, StaircasePrime, enumerate_minimal_primes
from wedgelab.multiplicity import (
    INCONCLUSIVE,
    PROVEN,
    NotMinimalPrimeError,
    certify,
    conjecture_sweep,
    determinant,
    linear_part,
    paper_evaluation,
    paper_matrix,
    paper_selection,
    rank_mod,
)
from wedgelab.parsing import parse_polynomial as P
from wedgelab.polynomial import wedge

XY = MonomialHypersurface((1, 1))
XYZ = MonomialHypersurface((1, 1, 1))


def primes(X, m):
    return enumerate_minimal_primes(X, m)


class TestLinearPart:
    def test_example(self):
        pv = {wedge("x", 0, 0), wedge("y", 0, 0)}
        g = P("x_(0,0)*y_(1,0) + x_(1,0)*y_(0,0)")
        assert linear_part(g, pv) == {wedge("x", 0, 0): P("y_(1,0)"), wedge("y", 0, 0): P("x_(1,0)")}

    def test_g01_row(self):
        pv = {wedge("x", 0, 0), wedge("y", 0, 0)}
        g01 = XY.wedge_ideal(1).gens[0, 0, 1]
        assert linear_part(g01, pv) == {wedge("x", 0, 0): P("y_(0,1)"), wedge("y", 0, 0): P("x_(0,1)")}

    def test_quadratic_terms_vanish(self):
        pv = {wedge("x", 0, 0), wedge("y", 0, 0)}
        assert linear_part(P("x_(0,0)*y_(0,0)"), pv) == {}
        assert linear_part(P("x_(0,0)^2*y_(1,0)"), pv) == {}

    def test_outside_prime(self):
        with pytest.raises(ValueError):
            linear_part(P("x_(1,0)*y_(1,0)"), {wedge("x", 0, 0)})


class TestLinearAlgebra:
    def test_determinant(self):
        assert determinant([[0, 1], [1, 0]]) == -1
        assert determinant([[2, 1], [4, 2]]) == 0
        assert determinant([[1, 2, 3], [0, 1, 4], [5, 6, 0]]) == 1
        assert determinant([]) == 1

    def test_rank_mod(self):
        assert rank_mod([[1, 2], [2, 4]], 7) == 1
        assert rank_mod([[1, 2], [3, 4]], 7) == 2
        assert rank_mod([[7, 0], [0, 7]], 7) == 0

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3))
    def test_rank_matches_determinant(self, M):
        q = 65521
        assert (rank_mod(M, q) == 3) == (determinant(M) % q != 0)


class TestSelection:
    def test_xy_m1_prime_11(self):
        p = StaircasePrime(1, (1, 1))
        assert paper_selection(XY, p, 1) == [(wedge("x", 0, 0), (0, 1)), (wedge("y", 0, 0), (1, 0))]
        pt = paper_evaluation(XY, p, 1)
        assert pt[wedge("x", 1, 0)] == 1 and pt[wedge("y", 0, 1)] == 1 and pt[wedge("x", 0, 1)] == 0
        assert paper_matrix(XY.wedge_ideal(1), XY, p, 1) == [[1, 0], [0, 1]]

    def test_xy_m2_prime_21(self):
        got = [ij for _, ij in paper_selection(XY, StaircasePrime(2, (2, 1)), 2)]
        assert got == [(0, 1), (1, 1), (0, 2), (2, 0)]

    def test_xyz_m2_prime_111(self):
        p = StaircasePrime(2, (1, 1, 1))
        assert [ij for _, ij in paper_selection(XYZ, p, 2)] == [(0, 2), (2, 0), (1, 1)]
        ones = {str(v) for v, x in paper_evaluation(XYZ, p, 2).items() if x == 1}
        assert ones == {"x_(1,0)", "y_(0,1)", "z_(0,1)", "z_(1,0)"}
        assert all(x in (0, 1) for x in paper_evaluation(XYZ, p, 2).values())

    def test_xy_prime_20(self):
        p = StaircasePrime(1, (2, 0))
        sel = paper_selection(XY, p, 1)
        assert [ij for _, ij in sel] == [(0, 0), (1, 0), (0, 1)]
        # x_(2,0) does not exist at m = 1, so only the y-side value survives
        assert {str(v) for v, x in paper_evaluation(XY, p, 1).items() if x} == {"y_(0,0)"}
        assert abs(certify(XY, p, 1).det_or_rank) == 1

    @pytest.mark.parametrize("m", range(7))
    def test_selection_bijective_onto_distinct_generators(self, m):
        for X in (XY, XYZ):
            for p in primes(X, m):
                sel = paper_selection(X, p, m)
                assert len(sel) == p.height
                assert len({v for v, _ in sel}) == len({ij for _, ij in sel}) == p.height
                assert all(i + j <= m for _, (i, j) in sel)

    @pytest.mark.parametrize("m", range(6))
    def test_r2_determinant_is_unit(self, m):
        W = XY.wedge_ideal(m)
        for p in primes(XY, m):
            assert abs(determinant(paper_matrix(W, XY, p, m))) == 1

    @pytest.mark.parametrize("m", range(5))
    def test_r3_matrix_is_unitriangular_up_to_order(self, m):
        W = XYZ.wedge_ideal(m)
        for p in primes(XYZ, m):
            M = paper_matrix(W, XYZ, p, m)
            assert abs(determinant(M)) == 1
            assert all(x in (0, 1) for row in M for x in row)

    @pytest.mark.parametrize("m", range(7))
    def test_r3_lower_unitriangular_with_x_block_reversed(self, m):
        W = XYZ.wedge_ideal(m)
        for p in primes(XYZ, m):
            M = paper_matrix(W, XYZ, p, m)
            tx = min(p.t)
            nx = tx * (tx + 1) // 2
            order = list(range(nx))[::-1] + list(range(nx, len(M)))
            R = [[M[i][j] for j in order] for i in order]
            assert all(R[i][i] == 1 for i in range(len(R)))
            assert all(R[i][j] == 0 for i in range(len(R)) for j in range(i + 1, len(R)))

    def test_r3_roles_sorted(self):
        # (0,2,1): the factor with the smallest order plays the x role
        p = StaircasePrime(2, (0, 2, 1))
        sel = paper_selection(XYZ, p, 2)
        assert {v.base for v, _ in sel} == {"y", "z"}

    def test_needs_reduced_r2_or_r3(self):
        with pytest.raises(ValueError):
            paper_selection(MonomialHypersurface((1, 1, 1, 1)), StaircasePrime(1, (2, 0, 0, 0)), 1)
        with pytest.raises(ValueError):
            certify(MonomialHypersurface((2, 1)), StaircasePrime(1, (1, 0)), 1)


class TestCertify:
    def test_not_minimal(self):
        with pytest.raises(NotMinimalPrimeError):
            certify(XY, StaircasePrime(1, (2, 1)), 1)
        with pytest.raises(NotMinimalPrimeError):
            certify(XY, StaircasePrime(1, (1, 0)), 1, "randomized")

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            certify(XY, StaircasePrime(1, (1, 1)), 1, "guess")

    @pytest.mark.parametrize("m", range(5))
    def test_paper_and_randomized_agree(self, m):
        for X in (XY, XYZ):
            W = X.wedge_ideal(m)
            for p in primes(X, m):
                a = certify(X, p, m, "paper", ideal=W)
                b = certify(X, p, m, "randomized", seed=m, ideal=W)
                assert a.verdict == b.verdict == PROVEN
                assert b.det_or_rank == p.height

    def test_randomized_inconclusive_over_tiny_field(self):
        # over F_2 a single unlucky point drops the rank; this is reported, never a false proof
        cert = certify(XYZ, StaircasePrime(2, (1, 1, 1)), 2, "randomized", q=2, trials=1, seed=0)
        assert cert.verdict == INCONCLUSIVE and cert.det_or_rank == 2 and cert.trials_used == 1
        assert certify(XYZ, StaircasePrime(2, (1, 1, 1)), 2, "randomized", q=3, trials=20, seed=0).proven

    def test_randomized_is_seed_reproducible(self):
        X = MonomialHypersurface((1, 1, 1, 1))
        p = primes(X, 3)[5]
        a = certify(X, p, 3, "randomized", seed=42)
        b = certify(X, p, 3, "randomized", seed=42)
        assert a.evaluation == b.evaluation and a.verdict == b.verdict


class TestSweep:
    def test_rows_and_tsv(self):
        res = conjecture_sweep(2, 2, "paper")
        assert [r.t for r in res.rows] == [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)]
        assert res.all_proven
        lines = res.to_tsv().splitlines()
        assert lines[0] == "m\tt\tstrategy\tverdict\tseed"
        assert lines[1] == "0\t1,0\tpaper\tmultiplicity_one_proven\t-"

    def test_seeded_and_parallel_identical(self):
        a = conjecture_sweep(3, 3, seed=7).to_tsv()
        b = conjecture_sweep(3, 3, seed=7, workers=2).to_tsv()
        assert a == b
        assert a != conjecture_sweep(3, 3, seed=8).to_tsv()

    def test_r4_small(self):
        assert conjecture_sweep(4, 2).all_proven

    def test_rejects_r1(self):
        with pytest.raises(ValueError):
            conjecture_sweep(1, 2)
