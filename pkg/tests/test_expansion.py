import math

import numpy as np
import pytest

from covosc.expansion import (
    coefficient,
    coefficients_upto,
    expand,
    overlap_coefficient_numeric,
    projection_numeric,
    reconstruct,
)
from covosc.quadrature import gauss_hermite, integrate_2d
from covosc.states import Rapidity, SpacetimePoint, psi_boosted, psi_rest


def test_coefficient_ground_state_is_geometric():
    beta = 0.45
    r = Rapidity.from_beta(beta)
    for k in range(8):
        expected = math.sqrt(1.0 - beta**2) * beta**k
        assert coefficient(0, k, r) == pytest.approx(expected, rel=1e-13)


def test_coefficient_at_rest_is_delta():
    for n in (0, 2, 5):
        assert coefficient(n, 0, 0.0) == 1.0
        for k in (1, 3, 10):
            assert coefficient(n, k, 0.0) == 0.0


def test_coefficient_frozen_value():
    # n=1, k=1, beta=0.5: (1 - 0.25) * sqrt(2) * 0.5
    r = Rapidity.from_beta(0.5)
    assert coefficient(1, 1, r) == pytest.approx(0.75 * math.sqrt(2.0) * 0.5, rel=1e-13)


def test_coefficient_ratio():
    r = Rapidity(0.8)
    tanh = math.tanh(0.8)
    for n in (0, 3):
        for k in range(6):
            ratio = coefficient(n, k + 1, r) / coefficient(n, k, r)
            assert ratio == pytest.approx(tanh * math.sqrt((n + k + 1) / (k + 1)), rel=1e-12)


def test_coefficient_sign_for_negative_rapidity():
    r = Rapidity(-0.7)
    for k in range(6):
        assert math.copysign(1.0, coefficient(0, k, r)) == (-1.0) ** k


def test_coefficients_upto_matches_scalar():
    r = Rapidity(1.2)
    vec = coefficients_upto(2, 9, r)
    for k in range(10):
        assert vec[k] == pytest.approx(coefficient(2, k, r), rel=1e-14)


def test_coefficient_rejects_negative_indices():
    with pytest.raises(ValueError):
        coefficient(-1, 0, 0.5)
    with pytest.raises(ValueError):
        coefficient(0, -2, 0.5)


def test_expand_at_rest():
    fc = expand(7, 0.0, 1e-12)
    np.testing.assert_array_equal(fc.coeffs, [1.0])
    assert fc.tail_bound == 0.0


def test_expand_geometric_truncation():
    # ground state, beta = 0.6: tail after K is beta^{2(K+1)}, so K = 22 at 1e-10
    fc = expand(0, Rapidity.from_beta(0.6), 1e-10)
    assert fc.truncation == 22
    assert fc.truncation == math.ceil(math.log(1e-10) / math.log(0.6**2)) - 1
    assert 0.0 <= fc.tail_bound < 1e-10
    assert fc.tail_bound == pytest.approx(0.6 ** (2 * 23), rel=1e-9)


def test_expand_mass_accounting():
    for n, eta in ((0, 0.8), (3, 1.5)):
        fc = expand(n, eta, 1e-9)
        total = float(np.sum(fc.coeffs**2))
        assert total <= 1.0 + 1e-12
        assert total + fc.tail_bound == pytest.approx(1.0, abs=1e-14)
        assert np.all(fc.coeffs >= 0.0)


def test_expand_nonconvergence_reported():
    with pytest.raises(RuntimeError, match="not converged"):
        expand(0, 10.0, 1e-10)  # beta so close to 1 the cap is exceeded


def test_expand_rejects_bad_tol():
    for bad in (0.0, 1.0, -0.5, 2.0):
        with pytest.raises(ValueError):
            expand(0, 1.0, bad)


def test_reconstruct_at_rest_exact():
    fc = expand(4, 0.0, 1e-12)
    for z, t in ((0.0, 0.0), (1.1, -0.4), (-2.0, 0.9)):
        p = SpacetimePoint(z, t)
        assert reconstruct(fc, p) == psi_rest(4, p)


def test_reconstruct_tail_error_bound():
    # loose truncation: pointwise error stays within 10x the mass shortfall
    r = Rapidity.from_beta(0.5)
    fc = expand(0, r, 1e-2)
    p = SpacetimePoint(0.7, -0.3)
    err = abs(reconstruct(fc, p) - psi_boosted(0, r, p))
    assert err < 10.0 * fc.tail_bound


def test_reconstruct_converges_on_grid():
    r = Rapidity.from_beta(0.5)
    axis = np.linspace(-3.0, 3.0, 41)
    zz, tt = np.meshgrid(axis, axis, indexing="ij")
    p = SpacetimePoint(zz, tt)
    target = psi_boosted(0, r, p)
    errs = []
    for tol in (1e-2, 1e-4, 1e-6, 1e-8, 1e-10):
        fc = expand(0, r, tol)
        errs.append(float(np.abs(reconstruct(fc, p) - target).max()))
    assert all(a >= b for a, b in zip(errs, errs[1:]))
    assert errs[-1] < 1e-4 * errs[0]
    assert errs[-1] < 1e-5


def test_reconstruct_parseval():
    fc = expand(1, 1.0, 1e-8)
    rule = gauss_hermite(64)
    val = integrate_2d(lambda z, t: reconstruct(fc, SpacetimePoint(z, t)) ** 2, rule)
    assert abs(val - float(np.sum(fc.coeffs**2))) < 2.0 * fc.tail_bound + 1e-8


def test_overlap_matches_analytic_sample():
    for n, k, eta in ((0, 0, 0.5), (1, 3, 1.0), (4, 10, 2.0), (2, 7, 1.5)):
        num = overlap_coefficient_numeric(n, k, eta)
        assert num == pytest.approx(coefficient(n, k, eta), abs=1e-8)


def test_overlap_at_rest_is_one():
    assert overlap_coefficient_numeric(3, 0, 0.0) == pytest.approx(1.0, abs=1e-12)


def test_cross_projections_vanish():
    # pairing phi_{n+k}(z) phi_k(t): any other t mode integrates to zero
    for n, k, j in ((0, 2, 1), (1, 2, 3), (2, 4, 6)):
        val = projection_numeric(n, 1.5, n + k, j)
        assert abs(val) < 1e-8


def test_overlap_envelope_guard():
    with pytest.raises(ValueError):
        overlap_coefficient_numeric(30, 11, 1.0)
