"""Density matrices of the squeezed ground state and the entropy of losing t.

The two-variable pure state has density matrix psi(z,t) psi(z',t'). The
time-like separation t is not observable, so it is traced out; the reduced
kernel has three equivalent forms which this module keeps side by side:

* a closed Gaussian kernel with prefactor (pi cosh 2 eta)^{-1/2} and
  exponent coefficients 1/(4 cosh 2 eta) and (cosh 2 eta)/4 whose product
  is 1/16 for every rapidity (the area-preserving squeeze signature),
* the Fock series (1 - beta^2) sum_k beta^{2k} phi_k(z) phi_k(z'),
  which exhibits the eigenvalues p_k = (1 - beta^2) beta^{2k} directly,
* the defining t integral of the pure density, done by quadrature.

Purity and entropy come from the geometric eigenvalue ladder in closed form:
Tr rho^2 = (1 - beta^2)/(1 + beta^2) = 1/cosh(2 eta), and
S = 2 [cosh^2(eta) ln cosh(eta) - sinh^2(eta) ln sinh(eta)].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .quadrature import QuadratureRule, gauss_hermite, integrate_1d, integrate_2d
from .special import phi_all
from .states import Rapidity, SpacetimePoint, as_rapidity, psi_boosted

__all__ = [
    "FockDistribution",
    "GaussianKernelParams",
    "pure_density",
    "reduced_density_closed",
    "reduced_density_series",
    "reduced_density_integral",
    "kernel_trace_numeric",
    "purity",
    "purity_numeric",
    "entropy",
    "entropy_beta_form",
]

_SQRT2 = np.sqrt(2.0)

# Below this, sinh(eta)^2 ln sinh(eta) is evaluated by its quadratic asymptote
# to dodge the 0 * log(0) indeterminacy.
_SMALL_SINH = 1e-8


@dataclass(frozen=True)
class FockDistribution:
    """Geometric eigenvalue ladder p_k = (1 - beta^2) beta^{2k} of the reduced state."""

    beta: float

    def __post_init__(self):
        if not abs(self.beta) < 1.0:
            raise ValueError(f"|beta| must be < 1, got {self.beta}")

    def probability(self, k: int) -> float:
        return float((1.0 - self.beta**2) * self.beta ** (2 * k))

    def probabilities(self, count: int) -> np.ndarray:
        k = np.arange(count)
        return (1.0 - self.beta**2) * self.beta ** (2 * k)

    def tail(self, k_max: int) -> float:
        """Exact probability mass beyond k_max: sum_{k<=K} p_k + tail = 1."""
        return float(self.beta ** (2 * (k_max + 1)))


@dataclass(frozen=True)
class GaussianKernelParams:
    """Parameters of the closed reduced kernel.

    rho(z, z') = prefactor * exp(-plus_coeff (z+z')^2 - minus_coeff (z-z')^2)
    with plus_coeff * minus_coeff = 1/16 independent of the rapidity.
    """

    eta: float
    prefactor: float
    plus_coeff: float
    minus_coeff: float

    @classmethod
    def from_rapidity(cls, eta) -> "GaussianKernelParams":
        e = as_rapidity(eta).eta
        c2 = np.cosh(2.0 * e)
        return cls(
            eta=e,
            prefactor=float((np.pi * c2) ** -0.5),
            plus_coeff=float(1.0 / (4.0 * c2)),
            minus_coeff=float(c2 / 4.0),
        )


def pure_density(eta, p1: SpacetimePoint, p2: SpacetimePoint):
    """Pure two-variable density psi(p1) psi(p2) for the squeezed ground state.

    Satisfies rho^2 = rho under the two-variable product and is symmetric in
    its arguments (the wave functions are real).
    """
    r = as_rapidity(eta)
    return psi_boosted(0, r, p1) * psi_boosted(0, r, p2)


def reduced_density_closed(eta, z, zp):
    """Closed Gaussian form of the reduced kernel rho(z, z')."""
    par = GaussianKernelParams.from_rapidity(eta)
    z = np.asarray(z, dtype=float)
    zp = np.asarray(zp, dtype=float)
    out = par.prefactor * np.exp(
        -par.plus_coeff * (z + zp) ** 2 - par.minus_coeff * (z - zp) ** 2
    )
    return out[()]


def reduced_density_series(eta, k_max: int, z, zp):
    """Fock form of the reduced kernel, truncated at mode k_max.

    (1 - beta^2) sum_{k<=k_max} beta^{2k} phi_k(z) phi_k(z'); converges to the
    closed kernel geometrically in k_max.
    """
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    beta = as_rapidity(eta).beta
    weights = FockDistribution(beta).probabilities(k_max + 1)
    z_modes = phi_all(k_max, z)
    zp_modes = phi_all(k_max, zp)
    w = weights.reshape((-1,) + (1,) * (z_modes.ndim - 1))
    return np.sum(w * z_modes * zp_modes, axis=0)[()]


def reduced_density_integral(eta, z: float, zp: float,
                             rule: QuadratureRule | None = None) -> float:
    """Defining form of the reduced kernel: integral psi(z,t) psi(z',t) dt.

    The t profile is a Gaussian of width 1/sqrt(cosh 2 eta) centered at
    (z + z') tanh(2 eta)/2; the rule is scaled and shifted onto it, making
    the quadrature exact for the ground state.
    """
    r = as_rapidity(eta)
    if rule is None:
        rule = gauss_hermite(32)
    c2 = np.cosh(2.0 * r.eta)
    center = 0.5 * (z + zp) * np.tanh(2.0 * r.eta)

    def integrand(t):
        return (
            psi_boosted(0, r, SpacetimePoint(z, t))
            * psi_boosted(0, r, SpacetimePoint(zp, t))
        )

    return integrate_1d(integrand, rule, scale=float(1.0 / np.sqrt(c2)), shift=float(center))


def kernel_trace_numeric(eta, rule: QuadratureRule | None = None) -> float:
    """Quadrature check of the trace condition integral rho(z, z) dz = 1."""
    r = as_rapidity(eta)
    if rule is None:
        rule = gauss_hermite(32)
    width = float(np.sqrt(np.cosh(2.0 * r.eta)))
    return integrate_1d(lambda z: reduced_density_closed(r, z, z), rule, scale=width)


def purity(eta) -> float:
    """Tr rho^2 of the reduced state: (1 - beta^2)/(1 + beta^2) = 1/cosh(2 eta).

    The geometric sum (1 - beta^2)^2 sum_k beta^{4k} in closed form; equals 1
    only at eta = 0.
    """
    beta = as_rapidity(eta).beta
    return (1.0 - beta**2) / (1.0 + beta**2)


def purity_numeric(eta, rule: QuadratureRule | None = None) -> float:
    """Tr rho^2 as the double integral of the closed kernel squared.

    Independent of the series route; the integrand is Gaussian along the
    (z+z')/sqrt(2) and (z-z')/sqrt(2) diagonals with widths sqrt(cosh 2 eta)
    and 1/sqrt(cosh 2 eta), so the light-cone scaled rule is exact.
    """
    r = as_rapidity(eta)
    if rule is None:
        rule = gauss_hermite(32)
    width = float(np.sqrt(np.cosh(2.0 * r.eta)))

    def integrand(z, zp):
        return reduced_density_closed(r, z, zp) * reduced_density_closed(r, zp, z)

    return integrate_2d(integrand, rule, lightcone_scales=(width, 1.0 / width))


def entropy(eta) -> float:
    """Entropy -Tr(rho ln rho) of the reduced state, in closed form.

    2 [cosh^2(eta) ln cosh(eta) - sinh^2(eta) ln |sinh(eta)|], with the
    eta -> 0 indeterminacy handled by the quadratic asymptote
    eta^2 (1 - 2 ln |eta|). Even in eta; zero only for the unboosted state.
    """
    e = as_rapidity(eta).eta
    s, c = np.sinh(e), np.cosh(e)
    if abs(s) < _SMALL_SINH:
        if s == 0.0:
            return 0.0
        return float(e * e * (1.0 - 2.0 * np.log(abs(e))))
    return float(2.0 * (c * c * np.log(c) - s * s * np.log(abs(s))))


def entropy_beta_form(beta: float) -> float:
    """Entropy in terms of the velocity parameter.

    [1/(1-b^2)] ln [1/(1-b^2)] - [b^2/(1-b^2)] ln [b^2/(1-b^2)] with
    b = beta; identical to entropy(atanh beta) via cosh^2 = 1/(1-b^2),
    sinh^2 = b^2/(1-b^2). Diverges as |beta| -> 1.
    """
    if not abs(beta) < 1.0:
        raise ValueError(f"|beta| must be < 1, got {beta}")
    if beta == 0.0:
        return 0.0
    grow = 1.0 / (1.0 - beta * beta)
    mix = beta * beta * grow
    return float(grow * np.log(grow) - mix * np.log(mix))
