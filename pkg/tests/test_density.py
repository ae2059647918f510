import math

import numpy as np
import pytest

from covosc.density import (
    FockDistribution,
    GaussianKernelParams,
    entropy,
    entropy_beta_form,
    kernel_trace_numeric,
    pure_density,
    purity,
    purity_numeric,
    reduced_density_closed,
    reduced_density_integral,
    reduced_density_series,
)
from covosc.quadrature import gauss_hermite, integrate_2d
from covosc.special import phi
from covosc.states import Rapidity, SpacetimePoint


def test_pure_density_origin_and_symmetry():
    origin = SpacetimePoint(0.0, 0.0)
    assert pure_density(0.0, origin, origin) == pytest.approx(1.0 / math.pi, rel=1e-14)
    p1 = SpacetimePoint(0.4, -0.2)
    p2 = SpacetimePoint(-1.0, 0.7)
    assert pure_density(1.3, p1, p2) == pure_density(1.3, p2, p1)


def test_pure_density_idempotent():
    # integral rho(p1; q) rho(q; p2) dq = rho(p1; p2)
    eta = 0.8
    rule = gauss_hermite(32)
    p1 = SpacetimePoint(0.5, -0.3)
    p2 = SpacetimePoint(-0.2, 0.9)

    def integrand(z, t):
        q = SpacetimePoint(z, t)
        return pure_density(eta, p1, q) * pure_density(eta, q, p2)

    val = integrate_2d(integrand, rule, lightcone_scales=(np.exp(eta), np.exp(-eta)))
    assert val == pytest.approx(pure_density(eta, p1, p2), abs=1e-8)


def test_kernel_params_invariant():
    for eta in (0.0, 0.7, 2.5):
        par = GaussianKernelParams.from_rapidity(eta)
        assert par.prefactor > 0
        assert par.plus_coeff * par.minus_coeff == pytest.approx(1.0 / 16.0, rel=1e-14)


def test_closed_kernel_at_rest_is_ground_projector():
    zs = np.linspace(-2, 2, 9)
    for z in zs:
        for zp in zs:
            assert reduced_density_closed(0.0, z, zp) == pytest.approx(
                phi(0, z) * phi(0, zp), rel=1e-13
            )


def test_closed_kernel_trace():
    for eta in (0.0, 1.2, 3.0):
        assert kernel_trace_numeric(eta) == pytest.approx(1.0, abs=1e-9)


def test_closed_kernel_matches_time_integral():
    eta = 1.0
    for z, zp in ((0.0, 0.0), (1.0, -0.5), (2.0, 1.5), (-1.0, -1.0)):
        direct = reduced_density_integral(eta, z, zp)
        assert direct == pytest.approx(reduced_density_closed(eta, z, zp), abs=1e-8)


def test_series_kernel_at_rest():
    assert reduced_density_series(0.0, 0, 0.3, -0.4) == pytest.approx(
        phi(0, 0.3) * phi(0, -0.4), rel=1e-14
    )
    # extra terms contribute nothing at rest
    assert reduced_density_series(0.0, 12, 0.3, -0.4) == pytest.approx(
        phi(0, 0.3) * phi(0, -0.4), rel=1e-14
    )


def test_series_kernel_converges_to_closed():
    for eta in (0.5, 1.0, 2.0):
        beta = math.tanh(eta)
        k_max = math.ceil(math.log(1e-10) / (2.0 * math.log(beta)))
        for z, zp in ((0.0, 0.0), (1.0, 0.5), (-2.0, 2.0)):
            series = reduced_density_series(eta, k_max, z, zp)
            closed = reduced_density_closed(eta, z, zp)
            assert series == pytest.approx(closed, abs=1e-8)


def test_series_kernel_diagonal_positive():
    for z in np.linspace(-3, 3, 13):
        assert reduced_density_series(1.5, 40, z, z) > 0.0


def test_fock_distribution():
    dist = FockDistribution(0.6)
    probs = dist.probabilities(30)
    assert np.all(probs >= 0)
    assert probs[1] / probs[0] == pytest.approx(0.36, rel=1e-14)
    assert float(np.sum(probs)) + dist.tail(29) == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(ValueError):
        FockDistribution(1.0)


def test_purity_values():
    assert purity(0.0) == 1.0
    # beta = 0.5: (1 - 0.25) / (1 + 0.25)
    assert purity(Rapidity.from_beta(0.5)) == pytest.approx(0.6, rel=1e-14)
    # geometric-series oracle: (1-b^2)^2 sum b^{4k}
    beta = math.tanh(1.3)
    oracle = (1 - beta**2) ** 2 * sum(beta ** (4 * k) for k in range(2000))
    assert purity(1.3) == pytest.approx(oracle, rel=1e-13)


def test_purity_equals_inverse_cosh2eta():
    for eta in (0.3, 1.0, 2.4):
        assert purity(eta) == pytest.approx(1.0 / math.cosh(2 * eta), rel=1e-13)


def test_purity_matches_quadrature():
    for eta in (0.5, 1.0, 2.0):
        assert purity_numeric(eta) == pytest.approx(purity(eta), abs=1e-7)


def test_purity_bounds():
    for eta in (0.0, 0.1, 1.0, 3.0):
        val = purity(eta)
        assert 0.0 < val <= 1.0
        assert (val == 1.0) == (eta == 0.0)


def test_entropy_at_rest_and_small_rapidity():
    assert entropy(0.0) == 0.0
    # quadratic asymptote continuous across the branch
    lo, hi = 0.99e-8, 1.01e-8
    assert entropy(hi) == pytest.approx(entropy(lo), rel=1e-4)
    assert entropy(1e-9) > 0.0


def test_entropy_matches_eigenvalue_sum():
    for eta in (0.5, 1.0, 2.0):
        beta = math.tanh(eta)
        count = math.ceil(math.log(1e-18) / (2 * math.log(beta))) + 1
        p = FockDistribution(beta).probabilities(count)
        fock = float(-np.sum(p * np.log(p)))
        assert entropy(eta) == pytest.approx(fock, abs=1e-12)


def test_entropy_even_and_increasing():
    etas = np.linspace(0.0, 3.0, 31)
    vals = [entropy(float(e)) for e in etas]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert entropy(-1.7) == pytest.approx(entropy(1.7), rel=1e-14)


def test_entropy_beta_form():
    assert entropy_beta_form(0.0) == 0.0
    for beta in (0.3, 0.6, 0.9):
        assert entropy_beta_form(beta) == pytest.approx(
            entropy(math.atanh(beta)), abs=1e-12
        )
    with pytest.raises(ValueError):
        entropy_beta_form(1.0)


def test_entropy_beta_form_diverges_towards_lightspeed():
    seq = [entropy_beta_form(b) for b in (0.9, 0.99, 0.999, 0.9999)]
    assert all(b > a for a, b in zip(seq, seq[1:]))
    assert seq[-1] > 9.0


def test_reduced_kernel_eigenvalues_by_discretization():
    # optional cross-check: discretize the kernel with quadrature weights and
    # eigensolve; the spectrum is the geometric ladder p_k
    eta = 1.0
    beta = math.tanh(eta)
    rule = gauss_hermite(80)
    width = math.sqrt(math.cosh(2 * eta))
    z = width * rule.nodes
    w = width * rule.weights * np.exp(rule.nodes**2)
    kernel = reduced_density_closed(eta, z[:, None], z[None, :])
    sym = np.sqrt(w)[:, None] * kernel * np.sqrt(w)[None, :]
    eigs = np.sort(np.linalg.eigvalsh(sym))[::-1]
    expected = FockDistribution(beta).probabilities(10)
    np.testing.assert_allclose(eigs[:10], expected, atol=1e-6)
