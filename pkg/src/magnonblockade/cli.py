"""Command-line front end: single points, scans, traces, condition solvers.

All rates are in units of gamma.  Axis flags use the min:max:count
syntax.  Exit codes: 0 success, 1 usage or parameter error, 2 solver
error, 3 I/O error.  MAGNONBLOCKADE_WORKERS sets the default worker
count for scans.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from .analytic import (
    AnalyticSingularityError,
    cmb_condition,
    g2_analytic,
    intersection_points,
    umb_condition_double,
    umb_condition_single,
)
from .correlations import VacuumStateError, g2_zero, occupation
from .hilbert import HilbertSpec
from .io import write_csv, write_json
from .liouville import EvolveError, SteadyStateError, build_liouvillian, steady_state
from .model import GAMMA_RAD_PER_S, PhysicalFieldParams, SystemParams, field_to_detunings
from .scan import ScanGrid, g2t_trace, scan_g2_grid, scan_g2_line, thermal_scan

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SOLVER = 2
EXIT_IO = 3


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1 on usage errors, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_axis(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"axis must be min:max:count, got {text!r}")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise UsageError(f"axis must be min:max:count with numeric fields, got {text!r}")
    return lo, hi, count


def _parse_float_list(text: str) -> list[float]:
    if not text.strip():
        return []
    try:
        return [float(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}")


def _default_workers() -> int:
    raw = os.environ.get("MAGNONBLOCKADE_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _add_physics_args(p: argparse.ArgumentParser, with_point_detunings: bool) -> None:
    p.add_argument("--g", type=float, required=True, help="coupling strength (gamma units)")
    p.add_argument("--kappa", type=float, default=0.5, help="shared decay rate")
    p.add_argument("--omega-m", type=float, default=0.01, help="magnon drive amplitude")
    p.add_argument("--omega-nv", type=float, default=None, help="qubit drive amplitude")
    p.add_argument("--lambda", dest="lam", type=float, default=None,
                   help="qubit/magnon drive ratio (requires --omega-m > 0)")
    p.add_argument("--n-th", type=float, default=0.0, help="thermal magnon occupation")
    p.add_argument("--n-max", type=int, default=6, help="magnon Fock truncation")
    if with_point_detunings:
        p.add_argument("--delta", type=float, required=True, help="driving detuning")
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--delta-f", type=float, help="half frequency detuning")
        group.add_argument("--b-z", type=float,
                           help="bias field in tesla; converted to delta_f")


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", required=True, help="output file path")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=_default_workers())


def _delta_f_from_field(b_z: float) -> float:
    _, _, delta_f = field_to_detunings(PhysicalFieldParams(b_z=b_z))
    return delta_f / GAMMA_RAD_PER_S


def _resolve_params(args, delta: float | None = None, delta_f: float | None = None) -> SystemParams:
    if args.omega_nv is not None and args.lam is not None:
        raise UsageError("--omega-nv and --lambda are mutually exclusive")
    omega_m = args.omega_m
    if args.lam is not None:
        if omega_m <= 0:
            raise UsageError("--lambda requires --omega-m > 0")
        omega_nv = args.lam * omega_m
    else:
        omega_nv = args.omega_nv if args.omega_nv is not None else 0.0
    if delta is None:
        delta = args.delta
    if delta_f is None:
        delta_f = args.delta_f
        if delta_f is None and getattr(args, "b_z", None) is not None:
            delta_f = _delta_f_from_field(args.b_z)
    try:
        return SystemParams(
            g=args.g,
            kappa=args.kappa,
            delta=delta,
            delta_f=delta_f,
            omega_m_drive=omega_m,
            omega_nv_drive=omega_nv,
            n_th=args.n_th,
        )
    except ValueError as err:
        raise UsageError(str(err))


def _write_result(result, args) -> None:
    if args.format == "json":
        write_json(result, args.output)
    else:
        write_csv(result, args.output)


def _cmd_point(args) -> int:
    params = _resolve_params(args)
    if params.kappa <= 0:
        raise UsageError("steady-state evaluation requires kappa > 0")
    spec = HilbertSpec(args.n_max)
    rho = steady_state(build_liouvillian(params, spec))
    g2 = g2_zero(rho, spec)
    n_magnon, n_qubit = occupation(rho, spec)
    try:
        g2_ana = g2_analytic(params)
    except (AnalyticSingularityError, ValueError):
        g2_ana = None
    record = {
        "g2": g2,
        "g2_analytic": g2_ana,
        "n_magnon": n_magnon,
        "n_qubit": n_qubit,
        "params": {
            "g": params.g,
            "kappa": params.kappa,
            "delta": params.delta,
            "delta_f": params.delta_f,
            "omega_m_drive": params.omega_m_drive,
            "omega_nv_drive": params.omega_nv_drive,
            "n_th": params.n_th,
            "n_max": args.n_max,
        },
    }
    print(json.dumps(record, indent=1))
    return EXIT_OK


def _cmd_scan(args) -> int:
    base = _resolve_params(args, delta=0.0, delta_f=0.0)
    if base.kappa <= 0:
        raise UsageError("scans require kappa > 0")
    grid = ScanGrid(
        delta_axis=_parse_axis(args.delta),
        delta_f_axis=_parse_axis(args.delta_f),
        base=base,
        n_max=args.n_max,
        include_analytic=args.analytic,
    )
    _write_result(scan_g2_grid(grid, workers=args.workers), args)
    return EXIT_OK


def _cmd_line(args) -> int:
    base = _resolve_params(args, delta=0.0, delta_f=0.0)
    if base.kappa <= 0:
        raise UsageError("scans require kappa > 0")
    result = scan_g2_line(
        base,
        _parse_axis(args.delta),
        _parse_float_list(args.delta_f_values),
        n_max=args.n_max,
        include_analytic=args.analytic,
        workers=args.workers,
    )
    _write_result(result, args)
    return EXIT_OK


def _cmd_thermal(args) -> int:
    params = _resolve_params(args)
    if params.kappa <= 0:
        raise UsageError("scans require kappa > 0")
    values = _parse_float_list(args.n_th_values)
    if any(v < 0 for v in values):
        raise UsageError("n_th values must be >= 0")
    result = thermal_scan(params, values, n_max=args.n_max, workers=args.workers)
    _write_result(result, args)
    return EXIT_OK


def _cmd_g2t(args) -> int:
    params = _resolve_params(args)
    if params.kappa <= 0:
        raise UsageError("g2(t) requires kappa > 0")
    lo, hi, count = _parse_axis(args.t)
    if lo < 0 or count < 2 or not lo < hi:
        raise UsageError(f"invalid time axis ({lo}, {hi}, {count})")
    result = g2t_trace(params, np.linspace(lo, hi, count), n_max=args.n_max)
    _write_result(result, args)
    return EXIT_OK


def _cmd_conditions(args) -> int:
    delta_f = args.delta_f
    field_note = None
    if delta_f is None and args.b_z is not None:
        delta_f = _delta_f_from_field(args.b_z)
        field_note = {"b_z": args.b_z, "delta_f": delta_f}
    if delta_f is None:
        raise UsageError("conditions needs --delta-f or --b-z")
    record: dict = {"g": args.g, "kappa": args.kappa, "delta_f": delta_f}
    if field_note:
        record["field"] = field_note

    cmb = cmb_condition(args.g, delta_f)
    record["cmb"] = {"roots": list(cmb.roots), "regime": cmb.regime}
    umb = umb_condition_single(args.g, delta_f, args.kappa)
    record["umb_single"] = {
        "roots": list(umb.roots),
        "regime": umb.regime,
        "finite_kappa_points": [list(p) for p in umb.finite_kappa_points],
    }
    if args.lam is not None:
        umb2 = umb_condition_double(args.g, delta_f, args.lam)
        record["umb_double"] = {"roots": list(umb2.roots), "regime": umb2.regime}
        record["intersections"] = [
            {"delta_f": (None if not exists and math.isnan(v) else v), "exists": exists}
            for v, exists in intersection_points(args.g, args.lam)
        ]
    print(json.dumps(record, indent=1))
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(
        prog="magnonblockade",
        description="Magnon statistics of the driven dissipative spin-magnon system",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("point", help="steady-state g2(0) at a single parameter point")
    _add_physics_args(p, with_point_detunings=True)
    p.set_defaults(func=_cmd_point)

    p = sub.add_parser("scan", help="g2(0) over a (delta, delta_f) grid")
    _add_physics_args(p, with_point_detunings=False)
    p.add_argument("--delta", required=True, help="delta axis min:max:count")
    p.add_argument("--delta-f", required=True, help="delta_f axis min:max:count")
    p.add_argument("--analytic", action="store_true", help="add the closed-form column")
    _add_output_args(p)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("line", help="delta sweeps at listed delta_f values")
    _add_physics_args(p, with_point_detunings=False)
    p.add_argument("--delta", required=True, help="delta axis min:max:count")
    p.add_argument("--delta-f-values", required=True,
                   help="comma-separated delta_f values")
    p.add_argument("--analytic", action="store_true")
    _add_output_args(p)
    p.set_defaults(func=_cmd_line)

    p = sub.add_parser("thermal", help="g2(0) versus thermal occupation")
    _add_physics_args(p, with_point_detunings=True)
    p.add_argument("--n-th-values", required=True, help="comma-separated n_th values")
    _add_output_args(p)
    p.set_defaults(func=_cmd_thermal)

    p = sub.add_parser("g2t", help="delayed correlation trace g2(t)")
    _add_physics_args(p, with_point_detunings=True)
    p.add_argument("--t", required=True, help="time axis min:max:count (units 1/gamma)")
    _add_output_args(p)
    p.set_defaults(func=_cmd_g2t)

    p = sub.add_parser("conditions", help="blockade-condition roots and intersections")
    p.add_argument("--g", type=float, required=True)
    p.add_argument("--kappa", type=float, default=0.5)
    p.add_argument("--lambda", dest="lam", type=float, default=None)
    p.add_argument("--delta-f", type=float, default=None)
    p.add_argument("--b-z", type=float, default=None)
    p.set_defaults(func=_cmd_conditions)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as err:
        print(f"magnonblockade: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (SteadyStateError, EvolveError, VacuumStateError, AnalyticSingularityError) as err:
        print(f"magnonblockade: solver error: {err}", file=sys.stderr)
        return EXIT_SOLVER
    except OSError as err:
        path = getattr(err, "filename", None)
        where = f" ({path})" if path else ""
        print(f"magnonblockade: I/O error{where}: {err}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
