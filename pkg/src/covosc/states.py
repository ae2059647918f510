"""Rest-frame and boosted oscillator wave functions on the (z, t) plane.

The state of interest is a product of one longitudinal oscillator mode in z
and the ground mode in the time-like separation t. A boost acts on the
arguments (passively, with -eta), which in light-cone coordinates
u = (z+t)/sqrt(2), v = (z-t)/sqrt(2) is the area-preserving squeeze
u -> e^{eta} u, v -> e^{-eta} v. Normalization is therefore boost invariant.

Transverse (x, y) factors are exact spectators under a z boost and are not
carried in the state; ``transverse_modes`` supplies the product factor when a
full 3+1 amplitude is wanted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .quadrature import GridSpec
from .special import phi

__all__ = [
    "MAX_STATE_RAPIDITY",
    "Rapidity",
    "as_rapidity",
    "SpacetimePoint",
    "LightConePoint",
    "to_lightcone",
    "from_lightcone",
    "apply_boost",
    "psi_rest",
    "psi_boosted",
    "transverse_modes",
    "oscillator_residual",
]

MAX_STATE_RAPIDITY = 10.0

_SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True)
class Rapidity:
    """Boost parameter eta; the velocity is beta = tanh(eta).

    Capped at |eta| <= 10 so that squeezed Gaussians stay normalizable
    within double precision.
    """

    eta: float

    def __post_init__(self):
        if not np.isfinite(self.eta) or abs(self.eta) > MAX_STATE_RAPIDITY:
            raise ValueError(
                f"|eta| must be finite and <= {MAX_STATE_RAPIDITY}, got {self.eta}"
            )

    @property
    def beta(self) -> float:
        return float(np.tanh(self.eta))

    @classmethod
    def from_beta(cls, beta: float) -> "Rapidity":
        if not abs(beta) < 1.0:
            raise ValueError(f"|beta| must be < 1, got {beta}")
        return cls(float(np.arctanh(beta)))


def as_rapidity(eta) -> Rapidity:
    """Coerce a float or Rapidity to Rapidity."""
    if isinstance(eta, Rapidity):
        return eta
    return Rapidity(float(eta))


class SpacetimePoint(NamedTuple):
    z: float
    t: float


class LightConePoint(NamedTuple):
    u: float
    v: float


def to_lightcone(p: SpacetimePoint) -> LightConePoint:
    """u = (z+t)/sqrt(2), v = (z-t)/sqrt(2)."""
    return LightConePoint((p.z + p.t) / _SQRT2, (p.z - p.t) / _SQRT2)


def from_lightcone(p: LightConePoint) -> SpacetimePoint:
    """z = (u+v)/sqrt(2), t = (u-v)/sqrt(2)."""
    return SpacetimePoint((p.u + p.v) / _SQRT2, (p.u - p.v) / _SQRT2)


def apply_boost(eta, p: SpacetimePoint) -> SpacetimePoint:
    """Boost the separation: (z, t) -> (z cosh + t sinh, z sinh + t cosh).

    Equivalent to the squeeze u -> e^{eta} u, v -> e^{-eta} v in light-cone
    coordinates; the product u*v is invariant.
    """
    e = as_rapidity(eta).eta
    c, s = np.cosh(e), np.sinh(e)
    return SpacetimePoint(p.z * c + p.t * s, p.z * s + p.t * c)


def psi_rest(n: int, p: SpacetimePoint):
    """Rest-frame wave function phi_n(z) phi_0(t); unit norm on the plane."""
    return phi(n, p.z) * phi(0, p.t)


def psi_boosted(n: int, eta, p: SpacetimePoint):
    """Boosted (squeezed) wave function.

    Defined by substituting the inverse boost into the rest-frame arguments:
    psi_rest(n, boost(-eta) p). For the ground state this is
    (1/pi)^{1/2} exp(-(e^{-2 eta} u^2 + e^{2 eta} v^2)/2).
    """
    r = as_rapidity(eta)
    return psi_rest(n, apply_boost(Rapidity(-r.eta), p))


def transverse_modes(n_x: int, n_y: int, x, y):
    """Spectator factor phi_{n_x}(x) phi_{n_y}(y) for the transverse plane.

    Unaffected by a z boost; multiply onto any longitudinal amplitude to
    recover the full 3+1 dimensional product state.
    """
    return phi(n_x, x) * phi(n_y, y)


def oscillator_residual(n: int, eta, grid: GridSpec) -> float:
    """Max residual of the oscillator eigenvalue equation on a grid.

    Applies (1/2) {(z^2 - t^2) - d^2/dz^2 + d^2/dt^2} by second-order central
    differences on the tensor grid and returns max |Op psi - n psi| over
    interior points. The eigenvalue is n: (n + 1/2) from the z mode minus 1/2
    from the t mode, and it is boost invariant because the operator is.
    The residual scales as spacing^2.
    """
    h = grid.spacing
    if h > 0.05:
        raise ValueError(f"grid too coarse for the stencil: spacing {h} > 0.05")
    axis = grid.points()
    zz, tt = np.meshgrid(axis, axis, indexing="ij")
    psi = psi_boosted(n, eta, SpacetimePoint(zz, tt))
    inner = psi[1:-1, 1:-1]
    d2z = (psi[2:, 1:-1] - 2.0 * inner + psi[:-2, 1:-1]) / h**2
    d2t = (psi[1:-1, 2:] - 2.0 * inner + psi[1:-1, :-2]) / h**2
    quad = zz[1:-1, 1:-1] ** 2 - tt[1:-1, 1:-1] ** 2
    op = 0.5 * (quad * inner - d2z + d2t)
    return float(np.abs(op - n * inner).max())
