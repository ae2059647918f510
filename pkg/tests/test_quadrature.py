import math

import numpy as np
import pytest

from covosc.quadrature import (
    MAX_ORDER,
    GridSpec,
    IntegrationError,
    gauss_hermite,
    integrate_1d,
    integrate_2d,
)
from covosc.special import phi
from covosc.states import SpacetimePoint, psi_boosted


def test_one_point_rule():
    rule = gauss_hermite(1)
    np.testing.assert_allclose(rule.nodes, [0.0], atol=1e-15)
    np.testing.assert_allclose(rule.weights, [math.sqrt(math.pi)], rtol=1e-14)


def test_rule_structure():
    rule = gauss_hermite(25)
    assert rule.order == 25
    assert np.all(np.diff(rule.nodes) > 0)
    assert np.all(rule.weights > 0)


def test_order_bounds():
    for bad in (0, -3, MAX_ORDER + 1):
        with pytest.raises(ValueError):
            gauss_hermite(bad)
    gauss_hermite(MAX_ORDER)  # boundary accepted


def test_gaussian_moments_exact():
    # integral x^{2j} exp(-x^2) = sqrt(pi) (2j-1)!! / 2^j, exact for 2j <= 2m-1
    rule = gauss_hermite(12)
    for j in range(12):
        got = float(np.sum(rule.weights * rule.nodes ** (2 * j)))
        expected = math.sqrt(math.pi) * math.prod(range(2 * j - 1, 0, -2)) / 2.0**j
        assert got == pytest.approx(expected, rel=1e-12)


def test_odd_moments_vanish():
    rule = gauss_hermite(9)
    assert float(np.sum(rule.weights * rule.nodes**3)) == pytest.approx(0.0, abs=1e-14)


def test_integrate_1d_examples():
    rule = gauss_hermite(32)
    assert integrate_1d(lambda x: phi(0, x) ** 2, rule) == pytest.approx(1.0, abs=1e-12)
    assert integrate_1d(lambda x: phi(0, x) * phi(2, x), rule) == pytest.approx(0.0, abs=1e-10)
    assert integrate_1d(lambda x: np.exp(-x * x), rule) == pytest.approx(math.sqrt(math.pi), rel=1e-13)


def test_integrate_1d_scale_and_shift():
    rule = gauss_hermite(24)
    # a wide, off-center Gaussian handled by realigning the rule
    val = integrate_1d(lambda x: np.exp(-((x - 3.0) / 5.0) ** 2), rule, scale=5.0, shift=3.0)
    assert val == pytest.approx(5.0 * math.sqrt(math.pi), rel=1e-13)


def test_integrate_1d_reports_nonfinite():
    rule = gauss_hermite(8)
    with np.errstate(divide="ignore", invalid="ignore"), pytest.raises(IntegrationError):
        integrate_1d(lambda x: 1.0 / (x - x), rule)


def test_integrate_2d_rest_state():
    rule = gauss_hermite(24)
    val = integrate_2d(
        lambda z, t: psi_boosted(0, 0.0, SpacetimePoint(z, t)) ** 2, rule
    )
    assert val == pytest.approx(1.0, abs=1e-12)


def test_integrate_2d_boosted_state_squeeze_aware():
    eta = 1.5
    rule = gauss_hermite(32)
    val = integrate_2d(
        lambda z, t: psi_boosted(2, eta, SpacetimePoint(z, t)) ** 2,
        rule,
        lightcone_scales=(np.exp(eta), np.exp(-eta)),
    )
    assert val == pytest.approx(1.0, abs=1e-8)


def test_integrate_2d_odd_integrand():
    rule = gauss_hermite(16)
    val = integrate_2d(lambda z, t: z * np.exp(-z * z - t * t), rule)
    assert val == pytest.approx(0.0, abs=1e-14)


def test_squeeze_aware_order_doubling_is_converged():
    # doubling the order changes nothing once the scaled rule resolves the state
    eta = 3.0
    results = []
    for order in (24, 48):
        rule = gauss_hermite(order)
        results.append(
            integrate_2d(
                lambda z, t: psi_boosted(4, eta, SpacetimePoint(z, t)) ** 2,
                rule,
                lightcone_scales=(np.exp(eta), np.exp(-eta)),
            )
        )
    assert abs(results[1] - results[0]) < 1e-9


def test_grid_spec():
    grid = GridSpec(-1.0, 1.0, 41)
    assert grid.spacing == pytest.approx(0.05)
    pts = grid.points()
    assert pts[0] == -1.0 and pts[-1] == 1.0 and len(pts) == 41
    with pytest.raises(ValueError):
        GridSpec(1.0, -1.0, 41)
    with pytest.raises(ValueError):
        GridSpec(0.0, 1.0, 1)
