"""Command-line front end: plot-ready data files plus the verification suite.

Subcommands: wavefunction, expand, density, entropy-curve, algebra, verify.
Data commands emit CSV (header row, 17 significant digits) or JSON
({"meta": ..., "data": {"columns": ..., "rows": ...}}) to stdout or --out.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field

import numpy as np

from . import __version__, density, expansion, states, verification
from .quadrature import GridSpec
from .states import SpacetimePoint

__all__ = ["OutputDocument", "parse_grid", "main"]

USAGE_ERROR = 2

# Grid values like "-3:3:61,-3:3:61" begin with a dash; widen argparse's
# negative-number heuristic so they parse as arguments, not option strings.
_DASH_VALUE = re.compile(r"^-\d")


@dataclass
class OutputDocument:
    """Columnar result with provenance metadata."""

    meta: dict
    columns: list[str]
    rows: list[list] = field(default_factory=list)

    def to_csv(self) -> str:
        lines = ["# meta: " + json.dumps(self.meta), ",".join(self.columns)]
        for row in self.rows:
            lines.append(",".join(_csv_cell(v) for v in row))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {"meta": self.meta, "data": {"columns": self.columns, "rows": self.rows}}
        return json.dumps(payload, indent=2) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_csv()


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def parse_grid(spec: str) -> tuple[GridSpec, GridSpec]:
    """Parse 'lo:hi:count,lo:hi:count' into two axis grids."""
    try:
        axes = []
        for part in spec.split(","):
            lo, hi, count = part.split(":")
            axes.append(GridSpec(float(lo), float(hi), int(count)))
        if len(axes) != 2:
            raise ValueError(f"expected 2 axes, got {len(axes)}")
        return axes[0], axes[1]
    except ValueError as exc:
        raise ValueError(f"bad grid {spec!r}: {exc}") from exc


def _meta(command: str, parameters: dict, tolerances: dict | None = None) -> dict:
    return {
        "command": command,
        "version": __version__,
        "parameters": parameters,
        "tolerances": tolerances or {},
    }


def _add_rapidity_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--eta", type=float, help="boost rapidity")
    group.add_argument("--beta", type=float, help="velocity tanh(eta), |beta| < 1")


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", default=None, help="output path (default stdout)")


def _rapidity_from(args, parser) -> states.Rapidity:
    try:
        if args.beta is not None:
            return states.Rapidity.from_beta(args.beta)
        return states.Rapidity(args.eta)
    except ValueError as exc:
        parser.error(str(exc))


def _emit(doc: OutputDocument, args) -> None:
    text = doc.render(args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_wavefunction(args, parser) -> int:
    rap = _rapidity_from(args, parser)
    try:
        z_axis, t_axis = parse_grid(args.grid)
    except ValueError as exc:
        parser.error(str(exc))
    zz, tt = np.meshgrid(z_axis.points(), t_axis.points(), indexing="ij")
    psi = states.psi_boosted(args.n, rap, SpacetimePoint(zz, tt))
    doc = OutputDocument(
        meta=_meta("wavefunction", {"n": args.n, "eta": rap.eta, "beta": rap.beta,
                                    "grid": args.grid}),
        columns=["z", "t", "psi"],
    )
    for i in range(z_axis.count):
        for j in range(t_axis.count):
            doc.rows.append([float(zz[i, j]), float(tt[i, j]), float(psi[i, j])])
    _emit(doc, args)
    return 0


def _cmd_expand(args, parser) -> int:
    rap = _rapidity_from(args, parser)
    if not 0.0 < args.tol < 1.0:
        parser.error(f"--tol must be in (0, 1), got {args.tol}")
    try:
        fc = expansion.expand(args.n, rap, args.tol)
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    doc = OutputDocument(
        meta=_meta(
            "expand",
            {"n": args.n, "eta": rap.eta, "beta": rap.beta, "tol": args.tol,
             "tail_bound": fc.tail_bound, "truncation": fc.truncation},
            {"tol": args.tol},
        ),
        columns=["k", "c", "cumulative"],
    )
    cumulative = np.cumsum(fc.coeffs**2)
    for k, (c, s) in enumerate(zip(fc.coeffs, cumulative)):
        doc.rows.append([k, float(c), float(s)])
    _emit(doc, args)
    return 0


def _cmd_density(args, parser) -> int:
    rap = _rapidity_from(args, parser)
    try:
        z_axis, zp_axis = parse_grid(args.grid)
    except ValueError as exc:
        parser.error(str(exc))
    zz, pp = np.meshgrid(z_axis.points(), zp_axis.points(), indexing="ij")
    rho = density.reduced_density_closed(rap, zz, pp)
    doc = OutputDocument(
        meta=_meta("density", {"eta": rap.eta, "beta": rap.beta, "grid": args.grid}),
        columns=["z", "zp", "rho"],
    )
    for i in range(z_axis.count):
        for j in range(zp_axis.count):
            doc.rows.append([float(zz[i, j]), float(pp[i, j]), float(rho[i, j])])
    _emit(doc, args)
    return 0


def _cmd_entropy_curve(args, parser) -> int:
    if args.eta_max <= 0:
        parser.error(f"--eta-max must be positive, got {args.eta_max}")
    if args.steps < 2:
        parser.error(f"--steps must be at least 2, got {args.steps}")
    doc = OutputDocument(
        meta=_meta("entropy-curve", {"eta_max": args.eta_max, "steps": args.steps}),
        columns=["eta", "beta", "entropy", "purity"],
    )
    for eta in np.linspace(0.0, args.eta_max, args.steps):
        rap = states.Rapidity(float(eta))
        doc.rows.append(
            [rap.eta, rap.beta, density.entropy(rap), density.purity(rap)]
        )
    _emit(doc, args)
    return 0


def _cmd_algebra(args, parser) -> int:
    doc = OutputDocument(
        meta=_meta("algebra", {}, {"exact_identities": 1e-12}),
        columns=["identity", "residual", "threshold", "passed"],
    )
    for check in verification.algebra_checks():
        doc.rows.append([check.name, check.residual, check.threshold, check.passed])
    _emit(doc, args)
    return 0 if all(row[3] for row in doc.rows) else 1


def _cmd_verify(args, parser) -> int:
    checks = verification.run_all(tol_scale=args.tol)
    width = max(len(c.name) for c in checks)
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        line = f"{status}  {c.name:<{width}}  residual {c.residual:.3e}  threshold {c.threshold:.3e}"
        if c.note:
            line += f"  ({c.note})"
        print(line)
    for note in verification.CONVENTION_NOTES:
        print(note)
    failed = [c for c in checks if not c.passed]
    if failed:
        print(f"{len(failed)} of {len(checks)} checks failed: "
              + ", ".join(c.name for c in failed))
        return 1
    print(f"all {len(checks)} checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covosc",
        description="Covariant oscillator toolkit: squeezed wave functions, "
                    "Fock-series expansions, reduced density matrices, entropy.",
    )
    parser._negative_number_matcher = _DASH_VALUE
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wavefunction", help="tabulate psi_n_eta on a (z, t) grid")
    p._negative_number_matcher = _DASH_VALUE
    p.add_argument("--n", type=int, default=0, help="longitudinal mode index")
    _add_rapidity_flags(p)
    p.add_argument("--grid", default="-4:4:81,-4:4:81", help="z and t axes as lo:hi:count,lo:hi:count")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_wavefunction)

    p = sub.add_parser("expand", help="series coefficients with certified truncation")
    p._negative_number_matcher = _DASH_VALUE
    p.add_argument("--n", type=int, default=0)
    _add_rapidity_flags(p)
    p.add_argument("--tol", type=float, default=1e-10, help="completeness shortfall target")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("density", help="reduced density kernel on a (z, z') grid")
    p._negative_number_matcher = _DASH_VALUE
    _add_rapidity_flags(p)
    p.add_argument("--grid", default="-3:3:61,-3:3:61", help="z and z' axes as lo:hi:count,lo:hi:count")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("entropy-curve", help="entropy and purity versus rapidity")
    p.add_argument("--eta-max", type=float, default=3.0)
    p.add_argument("--steps", type=int, default=61)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_entropy_curve)

    p = sub.add_parser("algebra", help="algebraic identity table with residuals")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_algebra)

    p = sub.add_parser("verify", help="run the full verification suite")
    p.add_argument("--tol", type=float, default=1.0,
                   help="multiplier applied to every check threshold")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
