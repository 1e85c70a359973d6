"""Command-line front end.

Subcommands:
  eval      extremal-function values at a point or over a radial grid
  mass      sector masses of the equilibrium measure for an l^q body
  density   numeric boundary densities f_q on an angle grid
  converge  envelope-vs-closed-form sup errors along the degree ladder
  verify    run the named invariant checks and report pass/fail

Exit codes: 0 success, 1 verification/tolerance failure, 2 usage error.
All numeric output is printed with 17 significant digits so repeated
runs are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .convex_body import LqBody, Polytope
from .extremal import (
    CONVERGENCE_DEGREES,
    ClosedFormP1Ball,
    ClosedFormPInfBall,
    RadialGrid,
    convergence_profile,
    make_evaluator,
)
from .monge_ampere import numeric_density, sector_mass_report
from .reinhardt import EuclideanBall, TorusProfile
from .verification import run_checks

HALF_PI = math.pi / 2.0


def _fmt(x: float) -> str:
    return "%.17g" % float(x)


def _json_q(q: float):
    # json.dumps would emit the non-standard token Infinity
    return "inf" if math.isinf(q) else q


def _parse_q(text: str, parser: argparse.ArgumentParser) -> float:
    try:
        q = float(text)
    except ValueError:
        parser.error(f"--q expects a number or 'inf', got {text!r}")
    if not q >= 1.0:
        parser.error(f"--q must satisfy q >= 1, got {text!r}")
    return q


def _parse_psi_grid(text: str, parser: argparse.ArgumentParser):
    """Angle grid: 'start:stop:count' or a comma-separated list."""
    try:
        if ":" in text:
            lo, hi, count = text.split(":")
            grid = np.linspace(float(lo), float(hi), int(count))
        else:
            grid = np.asarray([float(tok) for tok in text.split(",")])
    except ValueError:
        parser.error(f"bad --psi-grid {text!r}")
    if grid.size == 0 or (grid < 0.0).any() or (grid > HALF_PI + 1e-12).any():
        parser.error("--psi-grid angles must lie in [0, pi/2]")
    return [float(p) for p in grid]


def _load_polytope(path: str, parser: argparse.ArgumentParser) -> Polytope:
    try:
        with open(path) as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        parser.error(f"cannot read polytope file {path}: {exc}")
    if not isinstance(payload, dict) or set(payload) != {"vertices"}:
        parser.error(f"polytope file {path} must be an object with the single "
                     f"key 'vertices'")
    try:
        return Polytope(vertices=tuple(tuple(map(float, v))
                                       for v in payload["vertices"]))
    except (TypeError, ValueError) as exc:
        parser.error(f"bad polytope vertices in {path}: {exc}")


def _load_profile(path: str, parser: argparse.ArgumentParser) -> TorusProfile:
    rows = []
    try:
        with open(path, newline="") as fh:
            for row in csv.reader(fh):
                if not row or row[0].lstrip().startswith("#"):
                    continue
                if row[0].strip().lower() == "psi":
                    continue
                rows.append(tuple(float(tok) for tok in row))
    except (OSError, ValueError) as exc:
        parser.error(f"cannot read profile file {path}: {exc}")
    try:
        return TorusProfile(samples=tuple(rows))
    except ValueError as exc:
        parser.error(f"bad torus profile in {path}: {exc}")


def _resolve_body(args, parser):
    if (args.q is None) == (args.polytope is None):
        parser.error("specify exactly one of --q and --polytope")
    if args.q is not None:
        return LqBody(q=_parse_q(args.q, parser), d=2)
    return _load_polytope(args.polytope, parser)


def _resolve_compact(args, parser):
    if args.profile is not None:
        return _load_profile(args.profile, parser)
    if not args.ball > 0.0:
        parser.error("--ball radius must be positive")
    return EuclideanBall(radius=args.ball)


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(x) for x in row])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_eval(args, parser) -> int:
    body = _resolve_body(args, parser)
    compact = _resolve_compact(args, parser)
    evaluator = make_evaluator(body, compact, n=args.n)
    if args.point is not None:
        r1, r2 = args.point
        if r1 < 0.0 or r2 < 0.0:
            parser.error("--point takes nonnegative moduli |z1| |z2|")
        val = float(np.asarray(evaluator.eval_radial(r1, r2)))
        if args.format == "json":
            _emit(json.dumps({"point": [r1, r2], "value": val}) + "\n", args.out)
        else:
            _emit(_fmt(val) + "\n", args.out)
        return 0

    grid = RadialGrid()
    if args.psi_grid is not None:
        psis = _parse_psi_grid(args.psi_grid, parser)
        grid = RadialGrid(n_psi=len(psis))
        psi = np.asarray(psis)
        rho = np.linspace(grid.rho_min, grid.rho_max, grid.n_rho)
        s = np.exp(rho)
        r1 = np.outer(s, np.cos(psi)).ravel()
        r2 = np.outer(s, np.sin(psi)).ravel()
        rho_col = np.repeat(rho, len(psis))
        psi_col = np.tile(psi, grid.n_rho)
    else:
        r1, r2 = grid.moduli()
        rho_col, psi_col = grid.log_radii()
    vals = np.asarray(evaluator.eval_radial(r1, r2), dtype=float)
    rows = list(zip(psi_col, rho_col, vals))
    if args.format == "json":
        payload = {"rows": [[float(p), float(r), float(v)] for p, r, v in rows]}
        _emit(json.dumps(payload) + "\n", args.out)
    else:
        _emit(_csv_text(("psi", "rho", "value"), rows), args.out)
    return 0


def _cmd_mass(args, parser) -> int:
    if args.q is None:
        parser.error("mass reports require an l^q body (--q)")
    q = _parse_q(args.q, parser)
    report = sector_mass_report(q, n=args.n, sectors=args.sectors)
    if args.format == "csv":
        text = _csv_text(("psi1", "psi2", "mass"), report.sectors)
    else:
        payload = {
            "q": _json_q(q),
            "sectors": [[p1, p2, m] for p1, p2, m in report.sectors],
            "total": report.total,
            "expected_total": report.expected_total,
        }
        text = json.dumps(payload) + "\n"
    _emit(text, args.out)
    if args.tol is not None:
        rel = abs(report.total - report.expected_total) / report.expected_total
        if rel > args.tol:
            print(f"total mass off by relative {rel:.3e} > tol {args.tol:g}",
                  file=sys.stderr)
            return 1
    return 0


def _cmd_density(args, parser) -> int:
    if args.q is None:
        parser.error("density estimates require an l^q body (--q)")
    q = _parse_q(args.q, parser)
    if args.psi_grid is not None:
        psis = _parse_psi_grid(args.psi_grid, parser)
    else:
        psis = [float(p) for p in
                np.linspace(math.pi / 32.0, HALF_PI - math.pi / 32.0, 20)]
    rows = [(p, numeric_density(q, args.n, p)) for p in psis]
    if args.format == "json":
        payload = {"q": _json_q(q), "samples": [[p, f] for p, f in rows]}
        _emit(json.dumps(payload) + "\n", args.out)
    else:
        _emit(_csv_text(("psi", "f_q"), rows), args.out)
    return 0


def _cmd_converge(args, parser) -> int:
    if args.q is None:
        parser.error("convergence profiles require an l^q body (--q)")
    q = _parse_q(args.q, parser)
    if args.ball != 1.0 or args.profile is not None:
        parser.error("convergence profiles are defined against the unit ball")
    if math.isinf(q):
        reference = ClosedFormPInfBall()
    elif q == 1.0:
        reference = ClosedFormP1Ball()
    else:
        parser.error("closed forms exist for q = 1 and q = inf only")
    profile = convergence_profile(LqBody(q=q, d=2), EuclideanBall(1.0),
                                  reference.eval_radial)
    if args.format == "json":
        payload = {"q": _json_q(q), "profile": [[n, e] for n, e in profile]}
        _emit(json.dumps(payload) + "\n", args.out)
    else:
        _emit(_csv_text(("n", "sup_error"), profile), args.out)
    if args.tol is not None and profile[-1][1] > args.tol:
        print(f"final sup error {profile[-1][1]:.3e} > tol {args.tol:g}",
              file=sys.stderr)
        return 1
    return 0


def _cmd_verify(args, parser) -> int:
    results = run_checks()
    lines = [f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}"
             for r in results]
    failures = [r.name for r in results if not r.passed]
    text = "\n".join(lines) + "\n"
    text += json.dumps({"checks": len(results), "failures": failures}) + "\n"
    _emit(text, args.out)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pextremal",
        description="Extremal growth envelopes and equilibrium measures "
                    "for circled compacts in C^2.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, body=True, compact=True):
        if body:
            p.add_argument("--q", help="l^q growth body exponent (number or 'inf')")
            p.add_argument("--polytope", metavar="FILE",
                           help="JSON file {\"vertices\": [[x, y], ...]}")
        if compact:
            p.add_argument("--ball", type=float, default=1.0, metavar="R",
                           help="Euclidean ball radius (default 1)")
            p.add_argument("--profile", metavar="CSV",
                           help="torus profile samples psi,r1,r2")
        p.add_argument("--n", type=int, default=64,
                       help="monomial envelope degree (default 64)")
        p.add_argument("--format", choices=("csv", "json"), default=None)
        p.add_argument("--out", metavar="PATH", help="write output to a file")

    p = sub.add_parser("eval", help="evaluate the extremal function")
    common(p)
    p.add_argument("--point", nargs=2, type=float, metavar=("R1", "R2"),
                   help="moduli of a single evaluation point")
    p.add_argument("--psi-grid", help="'start:stop:count' or comma list")
    p.set_defaults(func=_cmd_eval, default_format="csv")

    p = sub.add_parser("mass", help="sector masses of the equilibrium measure")
    common(p, compact=False)
    p.add_argument("--sectors", type=int, default=32)
    p.add_argument("--tol", type=float, default=None,
                   help="fail (exit 1) if total mass misses the expected "
                        "total by more than this relative error")
    p.set_defaults(func=_cmd_mass, default_format="json")

    p = sub.add_parser("density", help="numeric boundary densities f_q")
    common(p, compact=False)
    p.add_argument("--psi-grid", help="'start:stop:count' or comma list")
    p.set_defaults(func=_cmd_density, default_format="csv")

    p = sub.add_parser("converge", help="envelope convergence ladder")
    common(p)
    p.add_argument("--tol", type=float, default=None,
                   help="fail (exit 1) if the final sup error exceeds this")
    p.set_defaults(func=_cmd_converge, default_format="csv")

    p = sub.add_parser("verify", help="run the named invariant checks")
    p.add_argument("--out", metavar="PATH", help="write output to a file")
    p.set_defaults(func=_cmd_verify, default_format=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "format", None) is None:
        args.format = args.default_format
    if getattr(args, "n", 64) < 1:
        parser.error("--n must be a positive integer")
    if getattr(args, "sectors", 32) < 1:
        parser.error("--sectors must be a positive integer")
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
