"""Explicit 4x4 realization of the Lorentz algebra on column vectors (x, y, z, t).

Conventions are pinned by two requirements at once: the commutators

    [J_i, J_j] = i eps_{ijk} J_k
    [J_i, K_j] = i eps_{ijk} K_k
    [K_i, K_j] = -i eps_{ijk} J_k

hold with these signs, and exp(-i eta K_3) is the boost with the
cosh/sinh block on (z, t). That fixes the representation uniquely:
rotations are -i eps on the spatial block, boosts carry +i in the
(axis, t) and (t, axis) slots.

Beyond the algebra itself this module provides the little-group
generators obtained by conjugating the rotations with a boost, the
two commuting combinations N_1 = K_1 - J_2 and N_2 = K_2 + J_1 that
close into a Euclidean E(2) algebra together with J_3, and the
residual measuring how fast the boosted rotations flatten onto that
E(2) algebra as the rapidity grows (the rate is exactly exp(-2 eta)).
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "MAX_BOOST_RAPIDITY",
    "MINKOWSKI_METRIC",
    "rotation_generator",
    "boost_generator",
    "commutator",
    "boost_matrix",
    "little_group_generator",
    "e2_generators",
    "contraction_residual",
    "four_momentum",
]

MAX_BOOST_RAPIDITY = 20.0

MINKOWSKI_METRIC = np.diag([1.0, 1.0, 1.0, -1.0])

_LEVI_CIVITA = np.zeros((3, 3, 3))
for _i, _j, _k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    _LEVI_CIVITA[_i, _j, _k] = 1.0
    _LEVI_CIVITA[_i, _k, _j] = -1.0


def _check_axis(axis: int) -> None:
    if axis not in (1, 2, 3):
        raise ValueError(f"axis must be 1, 2 or 3, got {axis}")


def _check_rapidity(eta: float) -> None:
    if not abs(eta) <= MAX_BOOST_RAPIDITY:
        raise ValueError(f"|rapidity| must be <= {MAX_BOOST_RAPIDITY}, got {eta}")


def rotation_generator(axis: int) -> np.ndarray:
    """Hermitian rotation generator J_axis: (J_i)_{jk} = -i eps_{ijk} spatially."""
    _check_axis(axis)
    out = np.zeros((4, 4), dtype=complex)
    out[:3, :3] = -1j * _LEVI_CIVITA[axis - 1]
    return out


def boost_generator(axis: int) -> np.ndarray:
    """Hermitian boost generator K_axis with +i in the (axis, t) slots."""
    _check_axis(axis)
    out = np.zeros((4, 4), dtype=complex)
    out[axis - 1, 3] = 1j
    out[3, axis - 1] = 1j
    return out


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def boost_matrix(eta: float) -> np.ndarray:
    """Boost along z by rapidity eta, in closed form.

    Identity on (x, y); [[cosh eta, sinh eta], [sinh eta, cosh eta]] on (z, t).
    Preserves the quadratic form x^2 + y^2 + z^2 - t^2.
    """
    _check_rapidity(eta)
    out = np.eye(4)
    c, s = np.cosh(eta), np.sinh(eta)
    out[2, 2] = c
    out[2, 3] = s
    out[3, 2] = s
    out[3, 3] = c
    return out


def little_group_generator(axis: int, eta: float) -> np.ndarray:
    """Boosted rotation generator J'_i = B(eta) J_i B(eta)^{-1}.

    These leave the boosted four-momentum invariant and satisfy the same
    commutation relations as the rotations themselves; J'_3 = J_3 since the
    z rotation commutes with the z boost.
    """
    b = boost_matrix(eta)
    return b @ rotation_generator(axis) @ boost_matrix(-eta)


def e2_generators() -> tuple[np.ndarray, np.ndarray]:
    """The commuting pair N_1 = K_1 - J_2, N_2 = K_2 + J_1.

    Together with J_3 these close into the Euclidean E(2) algebra:
    [N_1, N_2] = 0, [J_3, N_1] = i N_2, [J_3, N_2] = -i N_1.
    """
    n1 = boost_generator(1) - rotation_generator(2)
    n2 = boost_generator(2) + rotation_generator(1)
    return n1, n2


def contraction_residual(eta: float) -> float:
    """Distance of the rescaled boosted rotations from their flat-limit targets.

    Returns ||exp(-eta) J'_2 - (-N_1/2)||_F + ||exp(-eta) J'_1 - (N_2/2)||_F.
    The value is exactly 2 exp(-2 eta): each surviving entry of the rescaled
    generators approaches +-i/2 like (cosh eta) e^{-eta} - 1/2 = e^{-2 eta}/2.
    """
    n1, n2 = e2_generators()
    damp = np.exp(-eta)
    r1 = np.linalg.norm(damp * little_group_generator(2, eta) + 0.5 * n1)
    r2 = np.linalg.norm(damp * little_group_generator(1, eta) - 0.5 * n2)
    return float(r1 + r2)


def four_momentum(eta: float, mass: float = 1.0) -> np.ndarray:
    """Four-momentum of a mass boosted from rest along z: m (0, 0, sinh, cosh)."""
    return mass * np.array([0.0, 0.0, np.sinh(eta), np.cosh(eta)])
