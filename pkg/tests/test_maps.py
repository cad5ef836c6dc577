import numpy as np
import pytest

from mvfix import (
    CompactSet,
    DomainError,
    EvalError,
    InvariantError,
    apply_map,
    dist_point_set,
    domain_grid,
    finite_set_map,
    interval_map,
    is_fixed_point,
    singleton_map,
    table_map,
)

UNIT = CompactSet.interval(0.0, 1.0)


def halving_map():
    return interval_map(UNIT, "x/4", "(x+1)/2")


class TestIntervalMap:
    def test_value_at_zero(self):
        assert apply_map(halving_map(), 0.0) == CompactSet.interval(0.0, 0.5)

    def test_value_at_one(self):
        assert apply_map(halving_map(), 1.0) == CompactSet.interval(0.25, 1.0)

    def test_value_inside(self):
        got = apply_map(halving_map(), 0.2)
        assert got.intervals == ((pytest.approx(0.05), pytest.approx(0.6)),)

    def test_values_stay_sets(self):
        T = halving_map()
        rng = np.random.default_rng(2)
        for x in rng.uniform(0.0, 1.0, 200):
            A = apply_map(T, float(x))
            assert A.min <= A.max

    def test_inverted_endpoints_rejected(self):
        with pytest.raises(InvariantError):
            interval_map(UNIT, "x", "x/2")

    def test_near_tie_collapses_to_point(self):
        # lo exceeds hi by well under the slack, so the value is a singleton
        T = interval_map(UNIT, "x + 1e-15", "x")
        A = apply_map(T, 0.5)
        assert A.total_length == 0.0
        assert len(A.intervals) == 1

    def test_bad_expression_rejected_at_construction(self):
        with pytest.raises(EvalError):
            interval_map(UNIT, "1/x", "2/x")

    def test_every_fixed_point_on_grid(self):
        # x in [x/4, (x+1)/2] for all x in [0, 1], so D(x, Tx) = 0 everywhere
        T = halving_map()
        for x in domain_grid(UNIT, 101):
            assert is_fixed_point(T, x, tol=0.0)


class TestSingletonMap:
    def test_value(self):
        T = singleton_map(UNIT, "x/2")
        assert apply_map(T, 0.8) == CompactSet.point(0.4)

    def test_only_origin_is_fixed(self):
        T = singleton_map(UNIT, "x/2")
        assert is_fixed_point(T, 0.0)
        assert not is_fixed_point(T, 0.5)
        assert is_fixed_point(T, 0.5, tol=0.25)


class TestFiniteSetMap:
    def test_two_branches(self):
        T = finite_set_map(UNIT, ["x/4", "x/2"])
        assert apply_map(T, 0.8) == CompactSet([(0.2, 0.2), (0.4, 0.4)])

    def test_needs_members(self):
        with pytest.raises(InvariantError):
            finite_set_map(UNIT, [])


class TestTableMap:
    def build(self):
        return table_map(
            CompactSet.interval(0.0, 2.0),
            [(0.0, CompactSet.interval(0.0, 0.5)), (1.0, [(0.2, 0.3)])],
        )

    def test_exact_hit(self):
        T = self.build()
        assert apply_map(T, 0.0) == CompactSet.interval(0.0, 0.5)
        assert apply_map(T, 1.0) == CompactSet.interval(0.2, 0.3)

    def test_near_miss_is_an_error(self):
        with pytest.raises(DomainError):
            apply_map(self.build(), 1.0 + 1e-9)

    def test_key_outside_domain_rejected(self):
        with pytest.raises(InvariantError):
            table_map(UNIT, [(2.0, CompactSet.point(0.0))])

    def test_empty_table_rejected(self):
        with pytest.raises(InvariantError):
            table_map(UNIT, [])


class TestApplication:
    def test_outside_domain_rejected(self):
        with pytest.raises(DomainError):
            apply_map(halving_map(), 1.5)

    def test_negative_tolerance_rejected(self):
        with pytest.raises(DomainError):
            is_fixed_point(halving_map(), 0.5, tol=-1.0)

    def test_describe_shows_endpoints(self):
        text = halving_map().describe()
        assert text.startswith("T(x) = [")
        assert "x / 4" in text

    def test_distance_route_consistency(self):
        # is_fixed_point must agree with the raw distance computation
        T = singleton_map(UNIT, "x/2")
        rng = np.random.default_rng(9)
        for x in rng.uniform(0.0, 1.0, 100):
            x = float(x)
            d = dist_point_set(x, apply_map(T, x))
            assert is_fixed_point(T, x, tol=d)
            if d > 0:
                assert not is_fixed_point(T, x, tol=d * 0.5)
