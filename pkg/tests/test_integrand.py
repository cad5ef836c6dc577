import math

import numpy as np
import pytest

from mvfix import (
    ConstantIntegrand,
    DomainError,
    EvalError,
    ExponentialIntegrand,
    ExpressionIntegrand,
    InvariantError,
    PowerIntegrand,
    QuadratureError,
    adaptive_simpson,
    capital_phi,
    expression_integrand,
    parse_expr,
    phi_eval,
)


class TestPointwiseValues:
    def test_constant(self):
        assert phi_eval(ConstantIntegrand(1.0), 7.0) == 1.0

    def test_power(self):
        # phi(t) = 2 t at t = 3
        assert phi_eval(PowerIntegrand(p=1.0, scale=2.0), 3.0) == 6.0

    def test_power_zero_exponent(self):
        assert phi_eval(PowerIntegrand(p=0.0, scale=3.0), 0.0) == 3.0

    def test_power_singular_at_zero(self):
        assert phi_eval(PowerIntegrand(p=-0.5), 0.0) == math.inf

    def test_exponential(self):
        f = ExponentialIntegrand(rate=2.0, scale=0.5)
        assert phi_eval(f, 1.0) == pytest.approx(0.5 * math.e**2, rel=1e-15)

    def test_expression(self):
        f = expression_integrand("t*t + 1")
        assert phi_eval(f, 2.0) == 5.0

    def test_negative_argument_rejected(self):
        with pytest.raises(DomainError):
            phi_eval(ConstantIntegrand(1.0), -0.1)


class TestCumulativeTransform:
    def test_constant_quarter(self):
        assert capital_phi(ConstantIntegrand(1.0), 0.25) == 0.25

    def test_zero_is_zero(self):
        for f in (
            ConstantIntegrand(2.0),
            PowerIntegrand(1.0, 2.0),
            ExponentialIntegrand(0.3),
            expression_integrand("1 + t"),
        ):
            assert capital_phi(f, 0.0) == 0.0

    def test_power_closed_form(self):
        # integral of 2t over [0, 3] = 9
        assert capital_phi(PowerIntegrand(p=1.0, scale=2.0), 3.0) == 9.0

    def test_exponential_closed_form(self):
        f = ExponentialIntegrand(rate=1.0)
        assert capital_phi(f, 1.0) == pytest.approx(math.e - 1.0, rel=1e-15)

    def test_exponential_zero_rate(self):
        assert capital_phi(ExponentialIntegrand(rate=0.0, scale=2.0), 3.0) == 6.0

    def test_negative_argument_rejected(self):
        with pytest.raises(DomainError):
            capital_phi(ConstantIntegrand(1.0), -1e-9)

    def test_strictly_monotone(self):
        rng = np.random.default_rng(5)
        kinds = [
            ConstantIntegrand(0.7),
            PowerIntegrand(p=2.0, scale=1.5),
            ExponentialIntegrand(rate=-0.5),
            expression_integrand("1 + t*t"),
        ]
        for f in kinds:
            for _ in range(50):
                u, v = sorted(rng.uniform(0.0, 50.0, 2))
                if u == v:
                    continue
                assert capital_phi(f, u) < capital_phi(f, v)

    def test_positive_for_positive_argument(self):
        for f in (
            ConstantIntegrand(1.0),
            PowerIntegrand(p=0.5),
            PowerIntegrand(p=-0.5),
            ExponentialIntegrand(rate=-1.0),
            expression_integrand("t*t + 1e-6"),
        ):
            for eps in np.logspace(-12, 1, 14):
                assert capital_phi(f, float(eps)) > 0.0


class TestQuadratureAgainstClosedForms:
    # the numeric route must reproduce the analytic antiderivatives
    @pytest.mark.parametrize(
        "f",
        [
            ConstantIntegrand(1.3),
            PowerIntegrand(p=1.0, scale=2.0),
            PowerIntegrand(p=2.5, scale=0.4),
            ExponentialIntegrand(rate=0.05, scale=1.0),
            ExponentialIntegrand(rate=-0.8, scale=3.0),
        ],
    )
    def test_dual_route_agreement(self, f):
        rng = np.random.default_rng(13)
        for _ in range(20):
            u = float(rng.uniform(0.01, 100.0))
            numeric = adaptive_simpson(lambda t: phi_eval(f, t), 0.0, u)
            assert numeric == pytest.approx(capital_phi(f, u), abs=1e-9)

    def test_additivity_via_quadrature(self):
        f = expression_integrand("1 + t*t")
        rng = np.random.default_rng(17)
        for _ in range(20):
            u, v = rng.uniform(0.0, 20.0, 2)
            whole = capital_phi(f, float(u + v))
            first = capital_phi(f, float(u))
            rest = adaptive_simpson(lambda t: phi_eval(f, t), float(u), float(u + v))
            assert whole == pytest.approx(first + rest, abs=1e-9)

    def test_cubic_is_exact(self):
        got = adaptive_simpson(lambda t: t**3, 0.0, 2.0)
        assert got == pytest.approx(4.0, abs=1e-12)

    def test_empty_range(self):
        assert adaptive_simpson(lambda t: t, 3.0, 3.0) == 0.0

    def test_reversed_range_rejected(self):
        with pytest.raises(DomainError):
            adaptive_simpson(lambda t: t, 1.0, 0.0)

    def test_depth_exhaustion_raises(self):
        with pytest.raises(QuadratureError):
            adaptive_simpson(lambda t: math.sin(t) + 2.0, 0.0, 10.0, tol=1e-30, max_depth=3)


class TestValidation:
    @pytest.mark.parametrize("c", [0.0, -1.0, math.nan])
    def test_constant_needs_positive_c(self, c):
        with pytest.raises(InvariantError):
            ConstantIntegrand(c)

    def test_power_needs_p_above_minus_one(self):
        with pytest.raises(InvariantError):
            PowerIntegrand(p=-1.0)

    def test_power_needs_positive_scale(self):
        with pytest.raises(InvariantError):
            PowerIntegrand(p=1.0, scale=0.0)

    def test_exponential_needs_positive_scale(self):
        with pytest.raises(InvariantError):
            ExponentialIntegrand(rate=1.0, scale=-2.0)

    def test_expression_rejects_negative_region(self):
        with pytest.raises(InvariantError):
            expression_integrand("t - 50")

    def test_expression_rejects_zero_region(self):
        # zero on (0, 1) would make the transform vanish on an interval
        with pytest.raises(InvariantError):
            expression_integrand("max(0, t - 1)")

    def test_expression_allows_zero_at_origin(self):
        f = expression_integrand("t*t")
        assert phi_eval(f, 2.0) == 4.0
        assert capital_phi(f, 1.0) == pytest.approx(1.0 / 3.0, abs=1e-9)

    def test_expression_rejects_bad_grid_max(self):
        with pytest.raises(InvariantError):
            expression_integrand("1 + t", grid_max=0.0)

    def test_unvalidated_expression_flags_negative_values(self):
        # constructing the dataclass directly skips the grid check, but the
        # pointwise guard still fires
        raw = ExpressionIntegrand(ast=parse_expr("t - 50", variable="t"), source="t - 50")
        assert phi_eval(raw, 60.0) == 10.0
        with pytest.raises(EvalError):
            phi_eval(raw, 0.0)
