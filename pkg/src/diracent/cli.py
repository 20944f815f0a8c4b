"""Command-line front end: sweeps, single-point reports, the two-observer
scenario and the self-verification battery.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import measures, qmat, unruh
from .report import PAIRS, QUBITS, evaluate_point
from .sweep import FIGURE_COLUMNS, PAIR_SUFFIX, SweepConfig, format_value, run_sweep
from .verify import run_verification

USAGE_ERROR = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diracent",
        description=(
            "Entanglement between two fermionic field modes when one "
            "observer accelerates uniformly."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser(
        "sweep", help="evaluate a grid of mixing angles and write CSV/PNG files"
    )
    sweep.add_argument("--r-min", type=float, default=0.0, help="grid start (radians)")
    sweep.add_argument(
        "--r-max", type=float, default=unruh.R_MAX, help="grid end (radians, <= pi/4)"
    )
    sweep.add_argument("--steps", type=int, default=257, help="number of grid points")
    sweep.add_argument(
        "--out-dir", type=Path, default=Path("."), help="directory for output files"
    )
    sweep.add_argument(
        "--figures",
        default=",".join(FIGURE_COLUMNS),
        help="comma-separated figure ids (default: all)",
    )
    sweep.add_argument(
        "--plot",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="also render each figure to PNG",
    )
    sweep.set_defaults(func=_cmd_sweep)

    point = sub.add_parser("point", help="report every measure at one angle")
    point.add_argument("--r", type=float, required=True, help="mixing angle (radians)")
    point.set_defaults(func=_cmd_point)

    dual = sub.add_parser("dual", help="two accelerated observers")
    dual.add_argument("--r1", type=float, required=True, help="first observer's angle")
    dual.add_argument("--r2", type=float, required=True, help="second observer's angle")
    dual.set_defaults(func=_cmd_dual)

    verify = sub.add_parser("verify", help="run the self-verification battery")
    verify.add_argument(
        "--tol",
        type=float,
        default=1e-10,
        help="tolerance for the default class of checks (tighter bounds stay fixed)",
    )
    verify.set_defaults(func=_cmd_verify)
    return parser


def _cmd_sweep(args: argparse.Namespace) -> int:
    figures = tuple(f for f in args.figures.split(",") if f)
    cfg = SweepConfig(
        r_min=args.r_min,
        r_max=args.r_max,
        steps=args.steps,
        figures=figures,
        out_dir=args.out_dir,
        plot=args.plot,
    )
    for path in run_sweep(cfg):
        print(path)
    return 0


def _cmd_point(args: argparse.Namespace) -> int:
    param = unruh.AccelParam(args.r)
    rep = evaluate_point(param)
    out = [f"# point report at mixing angle r", f"r={format_value(rep.r)}"]
    out.append("# pure-state entropies (bits)")
    for k in QUBITS:
        out.append(f"S_{k}={format_value(rep.measures.entropies[k])}")
    for pair in PAIRS:
        suffix = PAIR_SUFFIX[pair]
        pm = rep.measures.pairs[pair]
        pp = rep.complementarity.pairs[pair]
        out.append(f"# pair {pair[0]},{pair[1]}")
        out.append(f"minpt_{suffix}={format_value(pm.min_pt_eigenvalue)}")
        out.append(f"N_{suffix}={format_value(pm.log_negativity)}")
        out.append(f"C_{suffix}={format_value(pm.concurrence)}")
        out.append(f"tau_{suffix}={format_value(pm.tangle)}")
        out.append(f"EF_{suffix}={format_value(pm.eof)}")
        out.append(f"I_{suffix}={format_value(pm.mutual_information)}")
        out.append(f"eta_{suffix}={format_value(pp.eta)}")
        out.append(f"M_{suffix}={format_value(pp.mixedness)}")
        out.append(f"two_qubit_residual_{suffix}={format_value(pp.two_qubit_residual)}")
        out.append(f"memms_gap_{suffix}={format_value(pp.memms_gap)}")
    out.append("# single-qubit properties")
    for k in QUBITS:
        qp = rep.complementarity.qubits[k]
        out.append(f"nu_{k}={format_value(qp.nu)}")
        out.append(f"p_{k}={format_value(qp.p)}")
        out.append(f"sbar2_{k}={format_value(qp.sbar2)}")
        out.append(f"pure_residual_{k}={format_value(rep.complementarity.pure_residuals[k])}")
    out.append("# tripartite")
    out.append(f"residual_tangle={format_value(rep.measures.residual_tangle)}")
    print("\n".join(out))
    return 0


def _cmd_dual(args: argparse.Namespace) -> int:
    p1 = unruh.AccelParam(args.r1)
    p2 = unruh.AccelParam(args.r2)
    rho = unruh.dual_acceleration(p1, p2)
    lines = [
        "# two accelerated observers",
        f"r1={format_value(p1.r)}",
        f"r2={format_value(p2.r)}",
        "# density matrix, basis |00>,|01>,|10>,|11> over (A, I)",
    ]
    for row in rho.matrix:
        lines.append("  ".join(f"{v.real: .12g}" for v in row))
    lines.append(f"N={format_value(measures.log_negativity(rho))}")
    lines.append(f"minpt={format_value(measures.min_pt_eigenvalue(rho))}")
    lines.append(f"C={format_value(measures.concurrence(rho))}")
    print("\n".join(lines))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    return run_verification(tol=args.tol)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed its message
        return USAGE_ERROR if exc.code else 0
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
