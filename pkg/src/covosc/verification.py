"""Self-verification suite: every correctness claim of the library as a runnable check.

Each check pairs an implementation route with an independent route (closed
form vs quadrature, series vs kernel, algebra vs structure constants) and
reports a residual with its tolerance. ``run_all`` executes all of them;
the CLI ``verify`` subcommand turns the outcome into an exit code.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import density, expansion, lorentz, states
from .quadrature import GridSpec, gauss_hermite, integrate_2d
from .states import SpacetimePoint

__all__ = [
    "CheckResult",
    "CONVENTION_NOTES",
    "lorentz_commutator_checks",
    "little_group_checks",
    "e2_contraction_checks",
    "boost_squeeze_check",
    "normalization_checks",
    "series_overlap_checks",
    "completeness_checks",
    "density_triangle_checks",
    "purity_checks",
    "entropy_checks",
    "oscillator_equation_checks",
    "algebra_checks",
    "run_all",
]

CONVENTION_NOTES = (
    "note: each 1D oscillator mode is unit-norm, so the boosted 2D state "
    "integrates to exactly 1 at every rapidity",
    "note: the series pairs z mode n+k with t mode k; the quadrature "
    "projections onto mismatched t modes vanish, confirming the pairing",
    "note: purity of the reduced state is (1-beta^2)/(1+beta^2) = 1/cosh(2 eta), "
    "and the velocity form of the entropy carries beta^2/(1-beta^2) in its "
    "mixed term; both are enforced against independent quadrature",
)

_LITTLE_GROUP_ETAS = (0.5, 1.0, 2.0)
_CONTRACTION_ETAS = (2.0, 4.0, 6.0)
_DENSITY_ETAS = (0.5, 1.0, 2.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    threshold: float
    passed: bool
    note: str = ""


def _check(name: str, residual: float, threshold: float, note: str = "") -> CheckResult:
    residual = float(residual)
    return CheckResult(name, residual, threshold, bool(residual < threshold), note)


def _comm_residual(a, b, target) -> float:
    return float(np.abs(lorentz.commutator(a, b) - target).max())


def lorentz_commutator_checks() -> list[CheckResult]:
    """The nine commutation relations of the rotation and boost generators."""
    out = []
    for i, j, k in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        jj = [lorentz.rotation_generator(a) for a in (i, j, k)]
        kk = [lorentz.boost_generator(a) for a in (i, j, k)]
        out.append(_check(f"[J{i},J{j}] = iJ{k}", _comm_residual(jj[0], jj[1], 1j * jj[2]), 1e-14))
        out.append(_check(f"[J{i},K{j}] = iK{k}", _comm_residual(jj[0], kk[1], 1j * kk[2]), 1e-14))
        out.append(_check(f"[K{i},K{j}] = -iJ{k}", _comm_residual(kk[0], kk[1], -1j * jj[2]), 1e-14))
    return out


def little_group_checks(etas=_LITTLE_GROUP_ETAS) -> list[CheckResult]:
    """Boosted rotations close like rotations and fix the boosted momentum."""
    out = []
    for eta in etas:
        jp = {a: lorentz.little_group_generator(a, eta) for a in (1, 2, 3)}
        closure = max(
            _comm_residual(jp[i], jp[j], 1j * jp[k])
            for i, j, k in ((1, 2, 3), (2, 3, 1), (3, 1, 2))
        )
        out.append(_check(f"little-group closure eta={eta}", closure, 1e-12))
        momentum = lorentz.four_momentum(eta)
        annihilation = max(float(np.abs(jp[a] @ momentum).max()) for a in (1, 2, 3))
        out.append(_check(f"little-group fixes momentum eta={eta}", annihilation, 1e-12))
    return out


def e2_contraction_checks() -> list[CheckResult]:
    """E(2) relations of (J3, N1, N2) and the exp(-2 eta) contraction rate."""
    n1, n2 = lorentz.e2_generators()
    j3 = lorentz.rotation_generator(3)
    out = [
        _check("[N1,N2] = 0", float(np.abs(lorentz.commutator(n1, n2)).max()), 1e-14),
        _check("[J3,N1] = iN2", _comm_residual(j3, n1, 1j * n2), 1e-14),
        _check("[J3,N2] = -iN1", _comm_residual(j3, n2, -1j * n1), 1e-14),
    ]
    resid = {eta: lorentz.contraction_residual(eta) for eta in _CONTRACTION_ETAS}
    for eta, r in resid.items():
        out.append(_check(f"contraction residual eta={eta}", r, 2.5 * np.exp(-2.0 * eta)))
    for lo, hi in ((2.0, 4.0), (4.0, 6.0)):
        ratio = resid[hi] / resid[lo]
        out.append(
            _check(
                f"contraction rate {lo}->{hi} ~ exp(-4)",
                abs(ratio / np.exp(-2.0 * (hi - lo)) - 1.0),
                0.05,
            )
        )
    return out


def boost_squeeze_check(count: int = 1000, seed: int = 20210907) -> CheckResult:
    """Matrix boost on (z, t) agrees with the light-cone squeeze pointwise."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(count):
        eta = rng.uniform(-3.0, 3.0)
        z, t = rng.uniform(-3.0, 3.0, size=2)
        zm, tm = (lorentz.boost_matrix(eta) @ np.array([0.0, 0.0, z, t]))[2:]
        u, v = states.to_lightcone(SpacetimePoint(z, t))
        zs, ts = states.from_lightcone(
            states.LightConePoint(np.exp(eta) * u, np.exp(-eta) * v)
        )
        worst = max(worst, abs(zm - zs), abs(tm - ts))
    return _check(f"boost = light-cone squeeze ({count} random points)", worst, 1e-13)


def normalization_checks() -> CheckResult:
    """Unit norm of the boosted states across modes and rapidities."""
    rule = gauss_hermite(32)
    worst = 0.0
    for n in range(9):
        for eta in (0.0, 0.5, 1.0, 2.0, 3.0):
            val = integrate_2d(
                lambda z, t: states.psi_boosted(n, eta, SpacetimePoint(z, t)) ** 2,
                rule,
                lightcone_scales=(np.exp(eta), np.exp(-eta)),
            )
            worst = max(worst, abs(val - 1.0))
    return _check("normalization n<=8, eta<=3", worst, 1e-8)


def series_overlap_checks() -> list[CheckResult]:
    """Analytic series coefficients against quadrature overlaps."""
    rule = gauss_hermite(64)
    worst = 0.0
    for eta in (0.5, 1.0, 2.0):
        for n in range(5):
            for k in range(11):
                num = expansion.overlap_coefficient_numeric(n, k, eta, rule)
                worst = max(worst, abs(num - expansion.coefficient(n, k, eta)))
    cross = 0.0
    for n, k in ((0, 0), (1, 2), (3, 5)):
        for j in (k - 1, k + 1, k + 2):
            if j < 0:
                continue
            cross = max(cross, abs(expansion.projection_numeric(n, 1.5, n + k, j, rule)))
    return [
        _check("series coefficients match overlaps", worst, 1e-8),
        _check("cross projections vanish", cross, 1e-8),
    ]


def completeness_checks() -> list[CheckResult]:
    """Certified truncation reaches the target mass; geometric bound is sharp."""
    out = []
    worst = 0.0
    for n, eta in ((0, np.arctanh(0.6)), (1, 1.0), (4, 1.5)):
        fc = expansion.expand(n, eta, 1e-10)
        worst = max(worst, 1.0 - float(np.sum(fc.coeffs**2)))
    out.append(_check("truncated sum reaches 1 - 1e-10", worst, 1e-10))
    fc = expansion.expand(0, np.arctanh(0.6), 1e-10)
    predicted = int(np.ceil(np.log(1e-10) / np.log(0.6**2))) - 1
    out.append(
        _check(
            "ground-state truncation matches geometric bound",
            abs(fc.truncation - predicted),
            0.5,
            note=f"K = {fc.truncation}, bound = {predicted}",
        )
    )
    return out


def density_triangle_checks() -> list[CheckResult]:
    """Closed kernel, Fock series and t integral of the pure density agree."""
    pts = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
    rule = gauss_hermite(32)
    worst = {"closed vs series": 0.0, "closed vs integral": 0.0, "series vs integral": 0.0}
    for eta in _DENSITY_ETAS:
        beta = np.tanh(eta)
        k_max = int(np.ceil(np.log(1e-10) / (2.0 * np.log(beta))))
        for z in pts:
            for zp in pts:
                closed = density.reduced_density_closed(eta, z, zp)
                series = density.reduced_density_series(eta, k_max, z, zp)
                integ = density.reduced_density_integral(eta, z, zp, rule)
                worst["closed vs series"] = max(worst["closed vs series"], abs(closed - series))
                worst["closed vs integral"] = max(worst["closed vs integral"], abs(closed - integ))
                worst["series vs integral"] = max(worst["series vs integral"], abs(series - integ))
    out = [_check(f"reduced kernel: {name}", val, 1e-7) for name, val in worst.items()]
    trace_dev = max(
        abs(density.kernel_trace_numeric(eta) - 1.0) for eta in (0.5, 1.2, 2.0, 3.0)
    )
    out.append(_check("kernel trace = 1", trace_dev, 1e-9))
    return out


def purity_checks() -> list[CheckResult]:
    """Closed purity ratio against the double-integral trace of rho^2."""
    worst = max(
        abs(density.purity(eta) - density.purity_numeric(eta)) for eta in _DENSITY_ETAS
    )
    return [
        _check(
            "purity (1-b^2)/(1+b^2) matches quadrature",
            worst,
            1e-7,
            note="equals 1/cosh(2 eta); below 1 whenever eta != 0",
        )
    ]


def entropy_checks() -> list[CheckResult]:
    """Closed entropy vs the eigenvalue sum, the origin value, and the beta form."""
    worst = 0.0
    for eta in (0.5, 1.0, 2.0):
        dist = density.FockDistribution(np.tanh(eta))
        count = int(np.ceil(np.log(1e-18) / (2.0 * np.log(abs(dist.beta))))) + 1
        p = dist.probabilities(count)
        fock_sum = float(-np.sum(p * np.log(p)))
        worst = max(worst, abs(density.entropy(eta) - fock_sum))
    beta_dev = max(
        abs(density.entropy_beta_form(b) - density.entropy(np.arctanh(b)))
        for b in (np.tanh(0.5), np.tanh(1.0), np.tanh(2.0))
    )
    return [
        _check("entropy closed form = eigenvalue sum", worst, 1e-12),
        _check("entropy at rest = 0", abs(density.entropy(0.0)), 1e-15),
        _check("entropy beta form = eta form", beta_dev, 1e-12),
    ]


def oscillator_equation_checks() -> list[CheckResult]:
    """Eigenvalue equation residual: O(h^2) with eigenvalue n, boost invariant."""
    grid = GridSpec(-5.0, 5.0, 501)
    h = grid.spacing
    out = []
    for n in (0, 1, 2):
        for eta in (0.0, 1.0):
            res = states.oscillator_residual(n, eta, grid)
            out.append(_check(f"oscillator equation n={n} eta={eta}", res, 50.0 * h * h))
    return out


def algebra_checks() -> list[CheckResult]:
    """The algebraic identities alone (the CLI algebra table)."""
    return (
        lorentz_commutator_checks()
        + e2_contraction_checks()
        + [c for c in little_group_checks() if "closure" in c.name]
    )


def run_all(tol_scale: float = 1.0) -> list[CheckResult]:
    """Every check in the suite; thresholds multiplied by tol_scale."""
    checks = (
        lorentz_commutator_checks()
        + little_group_checks()
        + e2_contraction_checks()
        + [boost_squeeze_check()]
        + [normalization_checks()]
        + series_overlap_checks()
        + completeness_checks()
        + density_triangle_checks()
        + purity_checks()
        + entropy_checks()
        + oscillator_equation_checks()
    )
    if tol_scale == 1.0:
        return checks
    return [
        replace(c, threshold=c.threshold * tol_scale, passed=c.residual < c.threshold * tol_scale)
        for c in checks
    ]
