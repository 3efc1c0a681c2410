import random
from math import comb

import pytest

from conftest import (
    dual_distribution_pair,
    msrd_d6_code,
    random_code,
    tup,
)
from srkit.ambient import enumerate_lattice, profile_create
from srkit.code import code_create, dual, zero_code
from srkit.distributions import (
    ConjectureReport,
    brute_distributions,
    binomial_moment_check,
    conjecture_scan,
    f_ell,
    fast_witness,
    macwilliams_ranklist,
    macwilliams_support,
    msrd_support_distribution,
    omega,
    omega_exclusion_scan,
    omega_fast_closed_form,
    omega_hat,
    omega_hat_exclusion_scan,
)
from srkit.errors import IncompleteDistribution, UnequalColumnSizes
from srkit.field import field_create
from srkit.matq import count_matrices_of_rank, gaussian_binomial

F2 = field_create(2)
F3 = field_create(3)


class TestBrute:
    def test_zero_code(self):
        p = profile_create(F2, [(2, 2), (1, 2)])
        srd, rld, supd = brute_distributions(zero_code(p))
        assert srd.counts[0] == 1 and sum(srd.counts) == 1
        assert rld.counts == {(0, 0): 1}
        assert len(supd.counts) == 1

    def test_single_word(self):
        p = profile_create(F2, [(2, 2), (2, 2)])
        C = code_create(p, [tup(p, [[1, 0], [0, 1]], [[0, 0], [0, 0]])])
        srd, _, _ = brute_distributions(C)
        assert srd.counts[0] == 1 and srd.counts[2] == 1 and sum(srd.counts) == 2

    def test_example_code_sweep(self):
        srd, rld, supd = brute_distributions(msrd_d6_code(F2))
        assert sum(srd.counts) == 8 and srd.counts[0] == 1
        assert srd.counts[6] > 0
        assert supd.ranklist().counts == rld.counts
        assert rld.sumrank(8).counts == srd.counts


class TestSumRankNoMacWilliams:
    def test_equal_distributions_different_duals(self):
        Ca, Cb = dual_distribution_pair()
        sa, _, _ = brute_distributions(Ca)
        sb, _, _ = brute_distributions(Cb)
        assert sa == sb
        da, _, _ = brute_distributions(dual(Ca))
        db, _, _ = brute_distributions(dual(Cb))
        assert da.counts[1] == 12
        assert db.counts[1] == 10


class TestTransforms:
    def test_whole_space_dualizes_to_zero(self):
        from srkit.code import full_code
        p = profile_create(F2, [(2, 2), (1, 1)])
        C = full_code(p)
        _, _, supd = brute_distributions(C)
        t = macwilliams_support(supd, C.size())
        assert list(t.counts) == [list(t.counts)[0]]
        (only,) = t.counts
        assert only.rank_L == 0 and t.counts[only] == 1

    def test_oracle_equality_random(self):
        rng = random.Random(7)
        pools = [[(2, 2), (1, 2)], [(1, 2), (1, 1), (1, 1)], [(2, 2), (2, 2)],
                 [(1, 3), (1, 2)], [(2, 3)], [(1, 1)] * 4]
        done = 0
        while done < 30:
            F = rng.choice([F2, F3])
            blocks = rng.choice(pools)
            p = profile_create(F, blocks)
            if F.q ** p.dim > 3 ** 8:
                continue
            C = random_code(rng, F, blocks, rng.randrange(0, p.dim + 1))
            D = dual(C)
            _, rl, sup = brute_distributions(C)
            _, rl_d, sup_d = brute_distributions(D)
            ts = macwilliams_support(sup, C.size())
            assert ts.counts == sup_d.counts
            tr = macwilliams_ranklist(rl, C.size())
            assert tr.counts == rl_d.counts
            assert ts.ranklist().counts == tr.counts
            # invertibility: applying the transform twice returns the input
            assert macwilliams_support(ts, D.size()).counts == sup.counts
            done += 1

    def test_zero_code_transforms_to_ambient_counts(self):
        p = profile_create(F2, [(2, 2), (1, 2)])
        Z = zero_code(p)
        _, rlz, _ = brute_distributions(Z)
        t = macwilliams_ranklist(rlz, 1)
        for u0 in range(3):
            for u1 in range(2):
                expect = (count_matrices_of_rank(2, 2, u0, 2)
                          * count_matrices_of_rank(1, 2, u1, 2))
                assert t.counts.get((u0, u1), 0) == expect

    def test_incomplete_distribution_rejected(self):
        p = profile_create(F2, [(1, 1)])
        _, _, supd = brute_distributions(zero_code(p))
        with pytest.raises(IncompleteDistribution):
            macwilliams_support(supd, 7)

    def test_partition_identity(self):
        # sum over V <= U of W_V equals the shortened-code size
        from srkit.code import shorten
        rng = random.Random(8)
        C = random_code(rng, F2, [(2, 2), (1, 2)], 3)
        _, _, supd = brute_distributions(C)
        for u in enumerate_lattice(C.profile):
            total = sum(w for v, w in supd.counts.items() if u.contains(v))
            assert total == 2 ** shorten(C, u).k


class TestBinomialMoments:
    def test_random_codes(self):
        rng = random.Random(9)
        for _ in range(25):
            F = rng.choice([F2, F3])
            C = random_code(rng, F, [(2, 2), (1, 2)], rng.randrange(0, 5))
            assert binomial_moment_check(C)

    def test_hamming_specialization(self):
        # all blocks 1x1: summing the identity over |u| = t - nu recovers the
        # classical binomial moments, checked directly on brute counts
        rng = random.Random(10)
        t = 4
        C = random_code(rng, F3, [(1, 1)] * t, 2)
        D = dual(C)
        srd, _, _ = brute_distributions(C)
        srd_d, _, _ = brute_distributions(D)
        W = srd.counts
        Wd = srd_d.counts
        for nu in range(t + 1):
            lhs = sum(W[i] * comb(t - i, nu) for i in range(t - nu + 1))
            rhs = sum(Wd[i] * comb(t - i, t - nu) for i in range(nu + 1))
            assert lhs * 3 ** nu == C.size() * rhs


class TestFEll:
    @pytest.mark.parametrize("u", [(2,), (3, 1), (2, 2, 1), (1, 1, 1, 1)])
    @pytest.mark.parametrize("q", [2, 3, 4])
    def test_edge_identities(self, u, q):
        w = sum(u)
        assert f_ell(u, w, q) == 1
        assert f_ell(u, w + 1, q) == 0
        assert f_ell(u, w + 5, q) == 0
        assert f_ell(u, w - 1, q) == \
            -sum(gaussian_binomial(ui, 1, q) for ui in u)

    def test_direct_sum_oracle(self):
        # brute: iterate all v <= u explicitly
        from itertools import product
        q = 3
        u = (2, 1, 2)
        for ell in range(sum(u) + 2):
            acc = 0
            for v in product(*[range(ui + 1) for ui in u]):
                if sum(v) != ell:
                    continue
                term = 1
                for ui, vi in zip(u, v):
                    d = ui - vi
                    term *= (-1) ** d * q ** (d * (d - 1) // 2) \
                        * gaussian_binomial(ui, vi, q)
                acc += term
            assert f_ell(u, ell, q) == acc


class TestMsrdSupportFormula:
    def test_below_distance_vanishes(self):
        assert omega((3, 3), 3, 2, 5, (2, 2)) == 0

    def test_at_distance_single_term(self):
        assert omega((3, 3), 3, 2, 4, (2, 2)) == 2 ** 3 - 1
        assert omega((2, 2, 2), 2, 3, 3, (1, 1, 1)) == 3 ** 2 - 1

    def test_matches_brute_on_constructed_codes(self):
        from srkit.code import msrd_check
        from srkit.constructions import construct_d2, construct_mds_lift
        cases = [construct_d2(F2, [(2, 2), (1, 2)]).code,
                 construct_mds_lift(F2, 2, 4, 2),
                 construct_d2(F2, [(2, 2), (2, 2)]).stated_dual]
        for C in cases:
            w = msrd_check(C)
            assert w.is_msrd
            _, _, supd = brute_distributions(C)
            for u in enumerate_lattice(C.profile):
                if u.rank_L == 0:
                    continue
                expect = msrd_support_distribution(C.profile, w.d,
                                                   u.dim_vector)
                assert supd.counts.get(u, 0) == expect

    def test_requires_equal_column_counts(self):
        p = profile_create(F2, [(2, 2), (1, 1)])
        with pytest.raises(UnequalColumnSizes):
            msrd_support_distribution(p, 2, (1, 0))

    def test_shortened_cardinalities(self):
        # equal column count m: |C(U)| is 1 below the distance and
        # q^(m(u-d+1)) from the distance on
        from srkit.code import msrd_check, shorten
        from srkit.constructions import construct_d2, construct_mds_lift
        for C in (construct_d2(F2, [(2, 2), (1, 2)]).code,
                  construct_mds_lift(F3, 2, 3, 2)):
            w = msrd_check(C)
            assert w.is_msrd
            m = C.profile.ms[0]
            for u in enumerate_lattice(C.profile):
                k = shorten(C, u).k
                if u.rank_L < w.d:
                    assert k == 0
                else:
                    assert k == m * (u.rank_L - w.d + 1)


class TestOmega:
    def test_known_negative(self):
        assert omega((3, 3, 2), 3, 3, 7, (3, 3, 2)) == -52

    @pytest.mark.parametrize("n", range(2, 7))
    def test_square_family(self, n):
        assert omega((n, n), n, 2, n + 1, (n, 2)) == 1 - 2 ** n

    def test_closed_form_matches(self):
        for shape, m, q, d in [((3, 3, 2), 3, 3, 7), ((3, 3), 3, 2, 4),
                               ((2, 2, 2), 4, 2, 3)]:
            u, closed = omega_fast_closed_form(shape, m, q, d)
            assert omega(shape, m, q, d, u) == closed

    def test_scan_finds_smallest_witness(self):
        res = omega_exclusion_scan((3, 3, 2), 3, 3, 7)
        assert res.excluded and res.witness == (3, 3, 2) and res.value == -52
        fast = omega_exclusion_scan((3, 3, 2), 3, 3, 7, fast=True)
        assert fast.excluded and fast.value == -52

    def test_fast_witness_shape(self):
        assert fast_witness((3, 3, 2), 6) == (3, 3, 1)
        assert fast_witness((2, 2), 3) == (2, 2)
        assert fast_witness((2, 2), 4) is None


class TestOmegaHat:
    def test_below_dual_distance_vanishes(self):
        # |u| < N - d + 2 gives an empty sum
        assert omega_hat((2, 2), 2, 2, 3, (1, 0)) == 0

    def test_substitution_identity(self):
        shape, m, q = (3, 2, 1), 3, 2
        N = sum(shape)
        for d in range(2, N + 1):
            for u in [(1, 1, 0), (3, 2, 1), (2, 2, 1)]:
                assert omega_hat(shape, m, q, d, u) == \
                    omega(shape, m, q, N - d + 2, u)

    def test_asymmetric_exclusion_exists(self):
        # some parameters are ruled out by the primal criterion but not the
        # dual one (and the sweep finds at least one such case)
        found = []
        for shape in [(2, 2), (3, 3), (3, 3, 2), (2, 2, 2), (3, 2)]:
            N = sum(shape)
            for q in (2, 3):
                for m in (max(shape), max(shape) + 1):
                    for d in range(3, N + 1):
                        primal = omega_exclusion_scan(shape, m, q, d)
                        dual_scan = omega_hat_exclusion_scan(shape, m, q, d)
                        if primal.excluded and not dual_scan.excluded:
                            found.append((shape, m, q, d))
        assert found


class TestConjectureScan:
    def test_small_grid_has_no_counterexample(self):
        shapes = []
        for t in (1, 2, 3):
            def rec(prefix, lo):
                if len(prefix) == t:
                    shapes.append(tuple(prefix))
                    return
                for n in range(1, lo + 1):
                    rec(prefix + [n], n)
            rec([], 3)
        report = conjecture_scan(shapes, qs=(2, 3), ms=(2, 3, 4))
        assert isinstance(report, ConjectureReport)
        assert report.cases > 100
        assert report.counterexamples == ()
        assert report.closed_form_mismatches == ()
