import math

import numpy as np
import pytest

from mvfix import (
    CompactSet,
    ConstantIntegrand,
    DomainError,
    FFunction,
    PairCheck,
    certify,
    check_pair_f_integral,
    check_pair_nadler,
    check_pair_ojha,
    evaluate_pair,
    interval_map,
    m_value,
    singleton_map,
    table_map,
)

UNIT = CompactSet.interval(0.0, 1.0)
LOG = FFunction("log")
ONE = ConstantIntegrand(1.0)


def halving_interval_map():
    return interval_map(UNIT, "x/4", "(x+1)/2")


def halving_point_map():
    return singleton_map(UNIT, "x/2")


class TestDisplacement:
    def test_interval_map_endpoints(self):
        # both 0 and 1 lie inside their value sets, so only |x - y| and the
        # cross terms matter; the cross average is (0 + 0.5) / 2 = 0.25
        T = halving_interval_map()
        assert m_value(T, 0.0, 1.0) == 1.0

    def test_point_map(self):
        # for T(x) = {x/2}: d = 1, D(0, T0) = 0, D(1, T1) = 0.5,
        # cross = (|0 - 0.5| + |1 - 0|) / 2 = 0.75
        T = halving_point_map()
        assert m_value(T, 0.0, 1.0) == 1.0
        assert m_value(T, 0.5, 1.0) == 0.5

    def test_symmetry(self):
        T = halving_interval_map()
        rng = np.random.default_rng(4)
        for _ in range(50):
            x, y = rng.uniform(0.0, 1.0, 2)
            assert m_value(T, float(x), float(y)) == m_value(T, float(y), float(x))

    def test_dominates_plain_distance(self):
        T = halving_point_map()
        rng = np.random.default_rng(8)
        for _ in range(50):
            x, y = rng.uniform(0.0, 1.0, 2)
            assert m_value(T, float(x), float(y)) >= abs(x - y)


class TestPairEvaluation:
    def test_worked_pair_hausdorff(self):
        ev = evaluate_pair(halving_interval_map(), LOG, ONE, 0.0, 1.0)
        assert ev.h == 0.5
        assert ev.m == 1.0
        assert ev.phi_h == 0.5
        assert ev.phi_m == 1.0
        assert ev.margin == pytest.approx(math.log(2.0), abs=1e-15)

    def test_worked_pair_excess(self):
        ev = evaluate_pair(halving_interval_map(), LOG, ONE, 0.0, 1.0, mode="excess")
        assert ev.h == 0.25
        assert ev.margin == pytest.approx(math.log(4.0), abs=1e-15)

    def test_equal_points_are_vacuous(self):
        ev = evaluate_pair(halving_interval_map(), LOG, ONE, 0.3, 0.3)
        assert ev.h == 0.0
        assert ev.margin is None

    def test_bad_mode(self):
        with pytest.raises(DomainError):
            evaluate_pair(halving_interval_map(), LOG, ONE, 0.0, 1.0, mode="sup")


class TestPairChecks:
    def test_f_integral_holds_and_fails(self):
        T = halving_point_map()
        # margin is exactly ln 2 on every non-vacuous pair of this map
        assert check_pair_f_integral(T, LOG, ONE, math.log(2.0), 0.0, 1.0) is PairCheck.HOLDS
        assert check_pair_f_integral(T, LOG, ONE, 0.8, 0.0, 1.0) is PairCheck.VIOLATED
        assert check_pair_f_integral(T, LOG, ONE, 0.6, 0.25, 0.25) is PairCheck.VACUOUS

    def test_f_integral_needs_positive_tau(self):
        with pytest.raises(DomainError):
            check_pair_f_integral(halving_point_map(), LOG, ONE, 0.0, 0.0, 1.0)

    def test_ojha_boundary(self):
        # excess(T(0), T(1)) = 1/4 and m = 1, so alpha = 1/4 sits on the edge
        T = halving_interval_map()
        assert check_pair_ojha(T, ONE, 0.25, 0.0, 1.0, mode="excess") is PairCheck.HOLDS
        assert check_pair_ojha(T, ONE, 0.2, 0.0, 1.0, mode="excess") is PairCheck.VIOLATED
        assert check_pair_ojha(T, ONE, 0.5, 0.0, 1.0, mode="hausdorff") is PairCheck.HOLDS

    def test_ojha_range(self):
        with pytest.raises(DomainError):
            check_pair_ojha(halving_interval_map(), ONE, 1.0, 0.0, 1.0)

    def test_nadler_boundary(self):
        T = halving_point_map()
        assert check_pair_nadler(T, 0.5, 0.0, 1.0) is PairCheck.HOLDS
        assert check_pair_nadler(T, 0.4, 0.0, 1.0) is PairCheck.VIOLATED

    def test_nadler_range(self):
        with pytest.raises(DomainError):
            check_pair_nadler(halving_point_map(), -0.1, 0.0, 1.0)


class TestCertify:
    def test_halving_point_map_modulus(self):
        # F(Phi(h)) = ln(|x-y|/2) and F(Phi(m)) = ln|x-y|, margin = ln 2
        report = certify(halving_point_map(), LOG, ONE)
        assert report.tau_star is not None
        assert abs(report.tau_star - math.log(2.0)) <= 1e-9
        assert not report.violations
        assert report.evaluated_pairs == 101 * 100 // 2 + 1000

    def test_identity_map_has_no_margin(self):
        # T(x) = {x}: h = m = |x - y|, so every margin is exactly zero
        report = certify(singleton_map(UNIT, "x"), LOG, ONE)
        assert report.tau_star == 0.0
        assert len(report.violations) == report.evaluated_pairs - report.vacuous_pairs
        assert report.violations

    def test_constant_map_is_all_vacuous(self):
        report = certify(interval_map(UNIT, "0", "0"), LOG, ONE)
        assert report.tau_star is None
        assert report.worst_pair is None
        assert report.vacuous_pairs == report.evaluated_pairs

    def test_worked_interval_map_excess_mode(self):
        # h = excess = |x-y|/4 and m = |x-y| on this map, margin = ln 4
        report = certify(halving_interval_map(), LOG, ONE, mode="excess")
        assert abs(report.tau_star - math.log(4.0)) <= 1e-9

    def test_worked_interval_map_hausdorff_mode(self):
        # h = H = |x-y|/2 and m = |x-y|, margin = ln 2
        report = certify(halving_interval_map(), LOG, ONE)
        assert abs(report.tau_star - math.log(2.0)) <= 1e-9

    def test_excess_margin_dominates_hausdorff_margin(self):
        # excess <= hausdorff pointwise and F is increasing, so per-pair
        # margins in excess mode can only be larger
        T = halving_interval_map()
        hs = certify(T, LOG, ONE, grid_size=21, random_pairs=50)
        ex = certify(T, LOG, ONE, grid_size=21, random_pairs=50, mode="excess")
        by_key = {(p.x, p.y): p for p in hs.pairs}
        compared = 0
        for p in ex.pairs:
            q = by_key[(p.x, p.y)]
            if p.margin is None or q.margin is None:
                continue
            assert p.margin >= q.margin - 1e-12
            compared += 1
        assert compared > 200

    def test_margin_sign_tracks_distance_comparison(self):
        # F monotone means margin >= 0 exactly when h <= m (up to rounding)
        report = certify(halving_interval_map(), LOG, ONE, grid_size=31, random_pairs=100)
        for p in report.pairs:
            if p.margin is None:
                continue
            if p.margin > 1e-12:
                assert p.h < p.m + 1e-12
            if p.h > p.m + 1e-12:
                assert p.margin < 1e-12

    def test_per_pair_errors_are_collected(self):
        # a table with one entry: lookups at the other grid point fail but
        # the sweep still completes
        domain = CompactSet([(0.0, 0.0), (1.0, 1.0)])
        T = table_map(domain, [(0.0, CompactSet.point(0.0))])
        report = certify(T, LOG, ONE, grid_size=2, random_pairs=0)
        assert report.evaluated_pairs == 0
        assert report.tau_star is None
        assert len(report.errors) == 1
        assert report.errors[0][:2] == (0.0, 1.0)

    def test_determinism(self):
        a = certify(halving_interval_map(), LOG, ONE, grid_size=11, random_pairs=200, seed=7)
        b = certify(halving_interval_map(), LOG, ONE, grid_size=11, random_pairs=200, seed=7)
        assert a == b

    def test_seed_changes_random_pairs(self):
        a = certify(halving_point_map(), LOG, ONE, grid_size=5, random_pairs=20, seed=1)
        b = certify(halving_point_map(), LOG, ONE, grid_size=5, random_pairs=20, seed=2)
        assert a.pairs != b.pairs

    def test_parameter_validation(self):
        with pytest.raises(DomainError):
            certify(halving_point_map(), LOG, ONE, grid_size=1)
        with pytest.raises(DomainError):
            certify(halving_point_map(), LOG, ONE, random_pairs=-1)
