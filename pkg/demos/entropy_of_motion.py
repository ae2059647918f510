"""
Entropy from an unmeasurable coordinate
=======================================

The two-variable state is pure, but the time-like separation t is not
observable, so it is traced out. At rest nothing is lost: the reduced state
is still the ground-state projector. Boosted, the squeeze entangles z with t
and the reduced state becomes a mixture with the geometric eigenvalue ladder
p_k = (1 - beta^2) beta^{2k}. Purity drops as 1/cosh(2 eta) and the entropy
grows without bound as the velocity approaches that of light.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from covosc import (
    FockDistribution,
    Rapidity,
    entropy,
    entropy_beta_form,
    purity,
    purity_numeric,
    reduced_density_closed,
)

# %% entropy and purity along the rapidity axis
etas = np.linspace(0.0, 3.0, 181)
fig, (left, mid, right) = plt.subplots(1, 3, figsize=(13, 4))
left.plot(etas, [entropy(float(e)) for e in etas], label="entropy")
left.plot(etas, [purity(float(e)) for e in etas], label="purity")
left.set_xlabel("eta")
left.legend()

# %% the same curve against the velocity, diverging at beta -> 1
betas = np.tanh(etas)
mid.plot(betas, [entropy_beta_form(float(b)) for b in betas])
mid.set_xlabel("beta = v/c")
mid.set_ylabel("entropy")

# %% the reduced kernel flattens and narrows as the boost grows
zs = np.linspace(-4, 4, 241)
for eta in (0.0, 1.0, 2.0):
    right.plot(zs, reduced_density_closed(eta, zs, zs), label=f"eta = {eta}")
right.set_xlabel("z")
right.set_ylabel("rho(z, z)")
right.legend()
fig.tight_layout()
fig.savefig("entropy_of_motion.png", dpi=150)
print("wrote entropy_of_motion.png")

# %% landmark values, with the quadrature cross-check for the purity
print("\n  eta   beta    entropy      purity       purity (quadrature)")
for eta in (0.0, 0.5, 1.0, 2.0, 3.0):
    r = Rapidity(eta)
    print(
        f"  {eta:.1f} {r.beta:7.4f} {entropy(r):11.6f} {purity(r):12.9f} "
        f"{purity_numeric(r):18.9f}"
    )

# %% the eigenvalue ladder of the reduced state at eta = 1
dist = FockDistribution(np.tanh(1.0))
probs = dist.probabilities(8)
print("\neigenvalues of the reduced state at eta = 1 (geometric ladder):")
print("  " + "  ".join(f"{p:.5f}" for p in probs))
print(f"  direct entropy from the ladder: "
      f"{-np.sum(dist.probabilities(600) * np.log(dist.probabilities(600))):.12f}")
print(f"  closed form:                    {entropy(1.0):.12f}")
