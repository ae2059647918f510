"""
Little groups and their flat limit
==================================

The rotations that leave a particle's momentum invariant deform under a
boost: J'_i = B(eta) J_i B(eta)^{-1}. They still close like rotations at any
finite rapidity, but rescaled by e^{-eta} two of them converge onto the
commuting pair N_1 = K_1 - J_2, N_2 = K_2 + J_1, which together with J_3
generate the Euclidean group of the plane. The convergence rate is exactly
e^{-2 eta}. This is the matrix face of how a massive particle's internal
symmetry turns into a massless particle's as it approaches the light cone.
"""

import numpy as np

from covosc import (
    boost_matrix,
    commutator,
    contraction_residual,
    e2_generators,
    four_momentum,
    little_group_generator,
    rotation_generator,
)

# %% the boosted rotations keep the rotation algebra...
print("little-group closure residuals, [J'_i, J'_j] - i J'_k:")
for eta in (0.5, 1.0, 2.0, 4.0):
    jp = {a: little_group_generator(a, eta) for a in (1, 2, 3)}
    worst = max(
        np.abs(commutator(jp[i], jp[j]) - 1j * jp[k]).max()
        for i, j, k in ((1, 2, 3), (2, 3, 1), (3, 1, 2))
    )
    print(f"  eta = {eta:4.1f}: {worst:.3e}")

# %% ...and annihilate the boosted momentum
print("\naction on the boosted four-momentum m(0, 0, sinh, cosh):")
for eta in (0.5, 2.0, 4.0):
    p = four_momentum(eta)
    worst = max(np.abs(little_group_generator(a, eta) @ p).max() for a in (1, 2, 3))
    print(f"  eta = {eta:4.1f}: max |J' p| = {worst:.3e}")

# %% the E(2) algebra the limit lands on
n1, n2 = e2_generators()
j3 = rotation_generator(3)
print("\nE(2) relations of (J_3, N_1, N_2):")
print(f"  |[N1, N2]|        = {np.abs(commutator(n1, n2)).max():.1e}")
print(f"  |[J3, N1] - iN2|  = {np.abs(commutator(j3, n1) - 1j * n2).max():.1e}")
print(f"  |[J3, N2] + iN1|  = {np.abs(commutator(j3, n2) + 1j * n1).max():.1e}")

# %% contraction: residual falls as e^{-2 eta}, i.e. a factor e^{-4} per step of 2
print("\ncontraction onto the E(2) generators:")
previous = None
for eta in (2.0, 4.0, 6.0, 8.0, 10.0):
    r = contraction_residual(eta)
    note = "" if previous is None else f"  ratio vs previous = {r / previous:.6e}"
    print(f"  eta = {eta:4.1f}: residual = {r:.6e}{note}")
    previous = r
print(f"  e^-4 for comparison: {np.exp(-4.0):.6e}")

# %% sanity: the closed-form boost is the honest group element
b = boost_matrix(3.0)
metric = np.diag([1.0, 1.0, 1.0, -1.0])
print(f"\nmetric preservation at eta = 3: |B^T g B - g| = "
      f"{np.abs(b.T @ metric @ b - metric).max():.1e}")
