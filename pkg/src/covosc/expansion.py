"""Fock-series representation of the boosted wave function, with certified truncation.

A boosted mode-n state expands over the rest-frame basis as

    psi_n_eta(z, t) = sum_k c_k phi_{n+k}(z) phi_k(t),
    c_k = (cosh eta)^{-(n+1)} sqrt((n+k)!/(n! k!)) (tanh eta)^k,

an infinite series for any nonzero rapidity: the boosts are a non-compact
direction and their unitary representations are infinite-dimensional. The
squared coefficients sum to 1 exactly (binomial series), which supplies an
exact completeness measure: truncation is certified by the shortfall
1 - sum c_k^2 rather than by term-size heuristics.

The index pairing phi_{n+k}(z) with phi_k(t) is the one confirmed by the
quadrature overlap oracle in this module: projections onto phi_{n+k}(z)
phi_j(t) vanish for j != k.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .quadrature import QuadratureRule, gauss_hermite, integrate_2d
from .special import log_sqrt_binomial, phi, phi_all
from .states import Rapidity, SpacetimePoint, as_rapidity, psi_boosted

__all__ = [
    "MAX_TERMS",
    "MAX_OVERLAP_MODE",
    "FockCoefficients",
    "coefficient",
    "coefficients_upto",
    "expand",
    "reconstruct",
    "overlap_coefficient_numeric",
    "projection_numeric",
]

MAX_TERMS = 10**6

# Quadrature accuracy envelope for the overlap oracle.
MAX_OVERLAP_MODE = 40


@dataclass(frozen=True)
class FockCoefficients:
    """Truncated coefficient sequence c_0..c_K with its completeness shortfall."""

    base_n: int
    eta: Rapidity
    coeffs: np.ndarray
    tail_bound: float

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1


def coefficient(n: int, k: int, eta) -> float:
    """Series coefficient c_k, evaluated in log space.

    Equals (1 - beta^2)^{(n+1)/2} sqrt((n+k)!/(n! k!)) beta^k with
    beta = tanh(eta); reduces to delta_{k0} at eta = 0.
    """
    if n < 0 or k < 0:
        raise ValueError("mode indices must be non-negative")
    r = as_rapidity(eta)
    beta = r.beta
    if beta == 0.0:
        return 1.0 if k == 0 else 0.0
    log_mag = (
        -(n + 1) * np.log(np.cosh(r.eta))
        + log_sqrt_binomial(n, k)
        + k * np.log(abs(beta))
    )
    return float(np.sign(beta) ** k * np.exp(log_mag))


def coefficients_upto(n: int, k_max: int, eta) -> np.ndarray:
    """Vector of c_0..c_{k_max} in one log-space pass."""
    r = as_rapidity(eta)
    beta = r.beta
    k = np.arange(k_max + 1)
    if beta == 0.0:
        out = np.zeros(k_max + 1)
        out[0] = 1.0
        return out
    log_mag = (
        -(n + 1) * np.log(np.cosh(r.eta))
        + log_sqrt_binomial(n, k)
        + k * np.log(abs(beta))
    )
    return np.sign(beta) ** k * np.exp(log_mag)


def expand(n: int, eta, tol: float) -> FockCoefficients:
    """Truncate the series at the smallest K with 1 - sum_{k<=K} c_k^2 < tol.

    The shortfall is exact because the full squared series sums to 1.
    Raises if more than MAX_TERMS coefficients would be needed, which only
    happens as |beta| -> 1.
    """
    if not 0.0 < tol < 1.0:
        raise ValueError(f"tol must be in (0, 1), got {tol}")
    r = as_rapidity(eta)
    beta = r.beta
    if beta == 0.0:
        return FockCoefficients(n, r, np.array([1.0]), 0.0)
    log_cosh = np.log(np.cosh(r.eta))
    log_beta = np.log(abs(beta))
    sign = np.sign(beta)

    total = 0.0
    blocks: list[np.ndarray] = []
    start, width = 0, 64
    while start <= MAX_TERMS:
        stop = min(start + width, MAX_TERMS + 1)
        k = np.arange(start, stop)
        block = sign**k * np.exp(
            -(n + 1) * log_cosh + log_sqrt_binomial(n, k) + k * log_beta
        )
        partial = total + np.cumsum(block * block)
        hits = np.nonzero(1.0 - partial < tol)[0]
        if hits.size:
            cut = int(hits[0])
            blocks.append(block[: cut + 1])
            coeffs = np.concatenate(blocks)
            return FockCoefficients(n, r, coeffs, float(1.0 - partial[cut]))
        blocks.append(block)
        total = float(partial[-1])
        start = stop
        width = min(2 * width, 1 << 16)
    raise RuntimeError(
        f"series not converged within {MAX_TERMS} terms (beta = {beta})"
    )


def reconstruct(coeffs: FockCoefficients, p: SpacetimePoint):
    """Evaluate the truncated series sum_k c_k phi_{n+k}(z) phi_k(t)."""
    n = coeffs.base_n
    big_k = coeffs.truncation
    z_modes = phi_all(n + big_k, p.z)[n:]
    t_modes = phi_all(big_k, p.t)
    c = coeffs.coeffs.reshape((-1,) + (1,) * (z_modes.ndim - 1))
    return np.sum(c * z_modes * t_modes, axis=0)[()]


def projection_numeric(n: int, eta, z_mode: int, t_mode: int,
                       rule: QuadratureRule | None = None) -> float:
    """Quadrature projection of psi_n_eta onto phi_{z_mode}(z) phi_{t_mode}(t).

    Uses the light-cone scaled rule: the combined Gaussian of the boosted
    state and the rest-frame modes has widths (1 + e^{-+2 eta})/2 along the
    light-cone axes, so after scaling the integrand is a polynomial times
    exp(-a^2 - b^2) and a fixed-order rule is exact.
    """
    if max(z_mode, t_mode) > MAX_OVERLAP_MODE:
        raise ValueError(f"projection modes limited to {MAX_OVERLAP_MODE}")
    r = as_rapidity(eta)
    if rule is None:
        rule = gauss_hermite(64)
    s_u = np.sqrt(2.0 / (1.0 + np.exp(-2.0 * r.eta)))
    s_v = np.sqrt(2.0 / (1.0 + np.exp(2.0 * r.eta)))

    def integrand(z, t):
        return psi_boosted(n, r, SpacetimePoint(z, t)) * phi(z_mode, z) * phi(t_mode, t)

    return integrate_2d(integrand, rule, lightcone_scales=(s_u, s_v))


def overlap_coefficient_numeric(n: int, k: int, eta,
                                rule: QuadratureRule | None = None) -> float:
    """Independent oracle for coefficient(): the overlap <phi_{n+k} phi_k | psi_n_eta>."""
    if n + k > MAX_OVERLAP_MODE:
        raise ValueError(f"n + k must be <= {MAX_OVERLAP_MODE} for the oracle")
    return projection_numeric(n, eta, n + k, k, rule)
