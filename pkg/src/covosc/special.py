"""Hermite polynomials, unit-norm oscillator eigenfunctions, log-space combinatorics.

Every other module builds on these three primitives, so they are kept
deliberately small: stable upward recurrences for the polynomials and
eigenfunctions, and log-gamma for anything factorial-shaped.
"""

from __future__ import annotations

import numpy as np
from scipy.special import gammaln

__all__ = ["hermite", "phi", "phi_all", "log_sqrt_binomial"]


def _check_mode(n: int) -> None:
    if n < 0:
        raise ValueError(f"mode index must be a non-negative integer, got {n}")


def hermite(n: int, z):
    """Physicists' Hermite polynomial H_n(z).

    Evaluated by the upward recurrence H_{n+1} = 2 z H_n - 2 n H_{n-1},
    which is stable in this direction. Accepts scalars or arrays.
    """
    _check_mode(n)
    z = np.asarray(z, dtype=float)
    h_prev = np.ones_like(z)
    if n == 0:
        return h_prev[()]
    h = 2.0 * z
    for k in range(1, n):
        h, h_prev = 2.0 * z * h - 2.0 * k * h_prev, h
    return h[()]


def phi(n: int, z):
    """Unit-norm harmonic oscillator eigenfunction.

    phi_n(z) = (sqrt(pi) 2^n n!)^{-1/2} H_n(z) exp(-z^2/2), computed with the
    normalized recurrence

        phi_{k+1} = z sqrt(2/(k+1)) phi_k - sqrt(k/(k+1)) phi_{k-1}

    so that no intermediate overflows for any mode index. Each mode satisfies
    the orthonormality relation integral(phi_m phi_n) = delta_{mn}.
    """
    _check_mode(n)
    return phi_all(n, z)[n]


def phi_all(n_max: int, z) -> np.ndarray:
    """All eigenfunctions phi_0(z) .. phi_{n_max}(z), stacked on axis 0.

    One pass of the normalized recurrence; prefer this over repeated phi()
    calls when summing series over many modes.
    """
    _check_mode(n_max)
    z = np.asarray(z, dtype=float)
    out = np.empty((n_max + 1,) + z.shape)
    out[0] = np.pi ** -0.25 * np.exp(-0.5 * z * z)
    if n_max >= 1:
        out[1] = np.sqrt(2.0) * z * out[0]
    for k in range(1, n_max):
        out[k + 1] = np.sqrt(2.0 / (k + 1)) * z * out[k] - np.sqrt(k / (k + 1.0)) * out[k - 1]
    return out


def log_sqrt_binomial(n, k):
    """ln sqrt((n+k)! / (n! k!)) via log-gamma, never raw factorials.

    Broadcasts over array arguments, so a whole coefficient sequence can be
    evaluated in one call.
    """
    n = np.asarray(n)
    k = np.asarray(k)
    if np.any(n < 0) or np.any(k < 0):
        raise ValueError("binomial arguments must be non-negative")
    out = 0.5 * (gammaln(n + k + 1.0) - gammaln(n + 1.0) - gammaln(k + 1.0))
    return out[()]
