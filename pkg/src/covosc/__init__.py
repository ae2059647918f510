"""Covariant harmonic oscillators under Lorentz boosts.

Boosts act on the normalizable two-variable oscillator states as squeeze
transformations along the light-cone axes. The package provides the
building blocks of that picture: stable oscillator eigenfunctions and
Gauss-Hermite oracles, a 4x4 realization of the Lorentz algebra with its
little groups and flat-limit contraction, the boosted wave functions, their
infinite Fock-series representation with certified truncation, and the
reduced density matrix, purity and entropy obtained when the time-like
separation variable is traced out.
"""

__version__ = "0.1.0"

from .density import (
    FockDistribution,
    GaussianKernelParams,
    entropy,
    entropy_beta_form,
    pure_density,
    purity,
    purity_numeric,
    reduced_density_closed,
    reduced_density_integral,
    reduced_density_series,
)
from .expansion import (
    FockCoefficients,
    coefficient,
    expand,
    overlap_coefficient_numeric,
    reconstruct,
)
from .lorentz import (
    boost_generator,
    boost_matrix,
    commutator,
    contraction_residual,
    e2_generators,
    four_momentum,
    little_group_generator,
    rotation_generator,
)
from .quadrature import (
    GridSpec,
    IntegrationError,
    QuadratureRule,
    gauss_hermite,
    integrate_1d,
    integrate_2d,
)
from .special import hermite, log_sqrt_binomial, phi, phi_all
from .states import (
    LightConePoint,
    Rapidity,
    SpacetimePoint,
    apply_boost,
    from_lightcone,
    oscillator_residual,
    psi_boosted,
    psi_rest,
    to_lightcone,
    transverse_modes,
)

__all__ = [
    "__version__",
    "hermite", "phi", "phi_all", "log_sqrt_binomial",
    "GridSpec", "QuadratureRule", "IntegrationError",
    "gauss_hermite", "integrate_1d", "integrate_2d",
    "rotation_generator", "boost_generator", "commutator", "boost_matrix",
    "little_group_generator", "e2_generators", "contraction_residual",
    "four_momentum",
    "Rapidity", "SpacetimePoint", "LightConePoint",
    "to_lightcone", "from_lightcone", "apply_boost",
    "psi_rest", "psi_boosted", "transverse_modes", "oscillator_residual",
    "FockCoefficients", "coefficient", "expand", "reconstruct",
    "overlap_coefficient_numeric",
    "FockDistribution", "GaussianKernelParams",
    "pure_density", "reduced_density_closed", "reduced_density_series",
    "reduced_density_integral", "purity", "purity_numeric",
    "entropy", "entropy_beta_form",
]
