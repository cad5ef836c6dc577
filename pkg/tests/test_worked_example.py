import math

import pytest

from mvfix import CompactSet, apply_map, build_example_map, run_worked_example


@pytest.fixture(scope="module")
def report():
    return run_worked_example()


def by_key(report):
    return {line.key: line for line in report.lines}


class TestExampleMap:
    def test_endpoint_images(self):
        T = build_example_map()
        assert apply_map(T, 0.0) == CompactSet.interval(0.0, 0.5)
        assert apply_map(T, 1.0) == CompactSet.interval(0.25, 1.0)


class TestAudit:
    def test_overall_pass(self, report):
        assert report.passed

    def test_all_keys_present(self, report):
        keys = {line.key for line in report.lines}
        assert keys == {
            "excess_t0_t1",
            "hausdorff_t0_t1",
            "alpha_min_excess",
            "tau_bound_excess",
            "tau_bound_hausdorff",
            "step_excess_n1",
            "step_hausdorff_n1",
            "gamma_1",
            "f_gamma_at_n1e5",
            "weight_at_n1e6",
            "set_limit_n1e7",
            "fixed_point_zero",
        }

    def test_one_sided_values_match_published(self, report):
        lines = by_key(report)
        assert lines["excess_t0_t1"].value == 0.25
        assert lines["step_excess_n1"].value == 0.125
        assert lines["gamma_1"].value == 0.125
        assert abs(lines["alpha_min_excess"].value - 0.25) <= 1e-12
        assert abs(lines["tau_bound_excess"].value - math.log(4.0)) <= 1e-9

    def test_two_sided_values_flagged(self, report):
        lines = by_key(report)
        assert lines["hausdorff_t0_t1"].value == 0.5
        assert "DISCREPANCY" in lines["hausdorff_t0_t1"].note
        assert lines["step_hausdorff_n1"].value == 0.25
        assert "DISCREPANCY" in lines["step_hausdorff_n1"].note
        assert abs(lines["tau_bound_hausdorff"].value - math.log(2.0)) <= 1e-9

    def test_tail_witnesses(self, report):
        lines = by_key(report)
        assert lines["f_gamma_at_n1e5"].value < -20.0
        assert lines["weight_at_n1e6"].value < 1e-2
        assert lines["set_limit_n1e7"].value < 1e-6

    def test_set_limit_decreases(self, report):
        dists = [d for _, d in report.set_limit_rows]
        assert all(b < a for a, b in zip(dists, dists[1:]))
        # closed form: hausdorff(T(1/n), T(0)) = 1/(2n)
        for n, d in report.set_limit_rows:
            assert d == pytest.approx(1.0 / (2.0 * n), rel=1e-9)

    def test_probe_witnesses(self, report):
        assert report.probe.f_gamma_decreasing
        assert report.probe.weight_decreasing
        assert len(report.probe.rows) == 8
