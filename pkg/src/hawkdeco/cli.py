"""Command-line interface.

Subcommands: info, rate, sweep, evolve, verify.  All numeric output uses
scientific notation with nine significant digits; CSV is comma-separated
with LF line endings, JSON is a single object with "meta" and "rows".
Exit codes: 0 success (verify: all checks passed or warned), 1 verify
found a failing check, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .blackhole import BlackHole, CODATA2018, planck_length, schwarzschild_radius
from .evolution import evolve_coherence
from .rates import (SuperpositionGeometry, VARIANT_CANONICAL, VARIANT_PRINTED,
                    classify_regime, thermal_bh_rate, vacuum_rate)
from .spectrum import EmissionSpectrum, total_emission_rate
from .verification import FAIL, run_checks

_VARIANT_ALIASES = {
    "canonical": VARIANT_CANONICAL,
    VARIANT_CANONICAL: VARIANT_CANONICAL,
    "printed_eq8": VARIANT_PRINTED,
}

_PRINTED_NOTICE = (
    "note: variant printed_eq8 uses the published closed-form coefficients, "
    "which are exactly 4x the emission-rate normalization"
)


def _fmt(x: float) -> str:
    if math.isinf(x):
        return "inf"
    return f"{x:.8e}"


def _json_value(x):
    # round-trip through the 9-digit display so JSON and CSV encode the
    # same numbers
    if isinstance(x, float):
        if math.isinf(x):
            return "inf"
        return float(_fmt(x))
    return x


def _emit(args, header: list[str], rows: list[list], meta: dict) -> None:
    if args.format == "json":
        payload = {
            "meta": {k: _json_value(v) for k, v in meta.items()},
            "rows": [
                {k: _json_value(v) for k, v in zip(header, row)}
                for row in rows
            ],
        }
        text = json.dumps(payload, indent=2, allow_nan=False) + "\n"
    else:
        lines = [",".join(header)]
        for row in rows:
            cells = []
            for v in row:
                if v is None:
                    cells.append("")
                elif isinstance(v, float):
                    cells.append(_fmt(v))
                else:
                    cells.append(str(v))
            lines.append(",".join(cells))
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _positive(name: str, value: float) -> float:
    if not value > 0.0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def _resolve_geometry(args) -> SuperpositionGeometry:
    r_s = schwarzschild_radius(args.mass)
    given = [args.dx is not None, args.dx_over_rs is not None]
    if sum(given) != 1:
        raise ValueError("provide exactly one of --dx or --dx-over-rs")
    if args.dx is not None:
        delta_x = args.dx
    else:
        delta_x = args.dx_over_rs * r_s
    return SuperpositionGeometry(delta_x=delta_x, r_s=r_s)


def cmd_info(args) -> int:
    hole = BlackHole(_positive("--mass", args.mass))
    lam = total_emission_rate(EmissionSpectrum(
        r_s=hole.r_s, species_multiplicity=args.species))
    header = ["r_s_m", "t_hawking_k", "t_evaporation_s", "lambda_total_per_s",
              "planck_length_m"]
    rows = [[hole.r_s, hole.t_hawking, hole.t_evaporation, lam, planck_length()]]
    _emit(args, header, rows,
          meta={"command": "info", "mass_kg": args.mass,
                "species_multiplicity": args.species, "constants": "CODATA2018"})
    return 0


def _rate_row(geom: SuperpositionGeometry, mode: str, variant: str, species: int):
    """(rate, tau, overlap, regime, variant_label); overlap None for thermal."""
    if mode == "vacuum":
        res = vacuum_rate(geom, variant, species_multiplicity=species)
        return res.rate, res.decoherence_time, res.overlap, res.regime, res.variant
    rate = thermal_bh_rate(geom, species_multiplicity=species)
    tau = math.inf if rate == 0.0 else 1.0 / rate
    return rate, tau, None, classify_regime(geom.dx_over_rs), None


def cmd_rate(args) -> int:
    _positive("--mass", args.mass)
    variant = _VARIANT_ALIASES[args.variant]
    if args.mode == "thermal" and args.variant != "canonical":
        raise ValueError("--variant applies to the vacuum mode only")
    geom = _resolve_geometry(args)
    if variant == VARIANT_PRINTED and args.mode == "vacuum":
        print(_PRINTED_NOTICE, file=sys.stderr)
    rate, tau, overlap, regime, variant_label = _rate_row(
        geom, args.mode, variant, args.species)
    header = ["rate_si", "tau_d_s", "overlap", "regime", "variant"]
    rows = [[rate, tau, overlap, regime, variant_label or ""]]
    _emit(args, header, rows,
          meta={"command": "rate", "mass_kg": args.mass, "delta_x_m": geom.delta_x,
                "dx_over_rs": geom.dx_over_rs, "mode": args.mode,
                "variant": variant_label, "species_multiplicity": args.species,
                "constants": "CODATA2018"})
    return 0


def cmd_sweep(args) -> int:
    _positive("--mass", args.mass)
    variant = _VARIANT_ALIASES[args.variant]
    if args.mode == "thermal" and args.variant != "canonical":
        raise ValueError("--variant applies to the vacuum mode only")
    start, stop, points = args.dx_over_rs
    npts = int(points)
    if npts != points or npts < 2:
        raise ValueError(f"sweep needs an integer point count >= 2, got {points}")
    if not stop > start:
        raise ValueError(f"need start < stop, got [{start}, {stop}]")
    if args.spacing == "log" and not start > 0.0:
        raise ValueError("log spacing needs start > 0")
    if start < 0.0:
        raise ValueError(f"separations must be non-negative, got start={start}")
    if variant == VARIANT_PRINTED and args.mode == "vacuum":
        print(_PRINTED_NOTICE, file=sys.stderr)

    r_s = schwarzschild_radius(args.mass)
    if args.spacing == "log":
        grid = np.logspace(math.log10(start), math.log10(stop), npts)
    else:
        grid = np.linspace(start, stop, npts)

    header = ["dx_over_rs", "rate_c_over_rs", "rate_si", "overlap", "regime"]
    rows = []
    for x in grid:
        geom = SuperpositionGeometry(delta_x=float(x) * r_s, r_s=r_s)
        rate, _, overlap, regime, _ = _rate_row(geom, args.mode, variant, args.species)
        rows.append([float(x), rate * r_s / CODATA2018.c, rate, overlap, regime])
    _emit(args, header, rows,
          meta={"command": "sweep", "mass_kg": args.mass, "mode": args.mode,
                "variant": variant if args.mode == "vacuum" else None,
                "spacing": args.spacing, "species_multiplicity": args.species,
                "constants": "CODATA2018"})
    return 0


def cmd_evolve(args) -> int:
    _positive("--mass", args.mass)
    _positive("--t-max", args.t_max)
    geom = _resolve_geometry(args)
    trace = evolve_coherence(geom, args.mass, args.t_max, args.steps,
                             evaporate=args.evaporate,
                             species_multiplicity=args.species)
    res = vacuum_rate(geom, species_multiplicity=args.species)
    header = ["t", "coherence", "mass"]
    rows = [[float(t), float(c), float(m)]
            for t, c, m in zip(trace.times, trace.coherence, trace.mass)]
    meta = {"command": "evolve", "mass_kg": args.mass, "delta_x_m": geom.delta_x,
            "t_max_s": args.t_max, "steps": args.steps,
            "evaporate": bool(args.evaporate),
            "species_multiplicity": args.species,
            "tau_d_s": res.decoherence_time,
            "quasi_static_valid": trace.quasi_static_valid,
            "constants": "CODATA2018"}
    _emit(args, header, rows, meta)
    if args.format == "csv":
        # keep stdout as pure CSV; the summary goes to stderr
        print(f"tau_d_s={_fmt(res.decoherence_time)} "
              f"quasi_static_valid={str(trace.quasi_static_valid).lower()}",
              file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    results = run_checks()
    failed = sum(1 for r in results if r.status == FAIL)
    if args.format == "json":
        payload = {
            "meta": {"command": "verify", "checks": len(results), "failed": failed},
            "rows": [{"name": r.name, "status": r.status, "detail": r.detail}
                     for r in results],
        }
        text = json.dumps(payload, indent=2, allow_nan=False) + "\n"
    else:
        lines = [f"{r.status} {r.name}: {r.detail}" for r in results]
        warned = sum(1 for r in results if r.status == "WARN")
        passed = len(results) - failed - warned
        lines.append(f"{passed} passed, {warned} warned, {failed} failed")
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hawkdeco",
        description="Decoherence of black hole spatial superpositions by Hawking radiation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", help="write output to this file instead of stdout")

    p_info = sub.add_parser("info", help="derived scales for a given mass")
    p_info.add_argument("--mass", type=float, required=True, help="hole mass in kg")
    p_info.add_argument("--species", type=int, default=1,
                        help="massless species multiplicity (default 1)")
    add_common(p_info)
    p_info.set_defaults(func=cmd_info)

    p_rate = sub.add_parser("rate", help="decoherence rate for one separation")
    p_rate.add_argument("--mass", type=float, required=True, help="hole mass in kg")
    p_rate.add_argument("--dx", type=float, help="branch separation in m")
    p_rate.add_argument("--dx-over-rs", type=float,
                        help="branch separation in horizon radii")
    p_rate.add_argument("--mode", choices=("vacuum", "thermal"), default="vacuum")
    p_rate.add_argument("--variant", choices=("canonical", "printed_eq8"),
                        default="canonical")
    p_rate.add_argument("--species", type=int, default=1)
    add_common(p_rate)
    p_rate.set_defaults(func=cmd_rate)

    p_sweep = sub.add_parser("sweep", help="rate table over a separation range")
    p_sweep.add_argument("--mass", type=float, required=True, help="hole mass in kg")
    p_sweep.add_argument("--dx-over-rs", type=float, nargs=3, required=True,
                         metavar=("START", "STOP", "POINTS"),
                         help="separation range in horizon radii")
    p_sweep.add_argument("--spacing", choices=("log", "linear"), default="log")
    p_sweep.add_argument("--mode", choices=("vacuum", "thermal"), default="vacuum")
    p_sweep.add_argument("--variant", choices=("canonical", "printed_eq8"),
                         default="canonical")
    p_sweep.add_argument("--species", type=int, default=1)
    add_common(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_evolve = sub.add_parser("evolve", help="coherence as a function of time")
    p_evolve.add_argument("--mass", type=float, required=True, help="hole mass in kg")
    p_evolve.add_argument("--dx", type=float, help="branch separation in m")
    p_evolve.add_argument("--dx-over-rs", type=float,
                          help="branch separation in horizon radii")
    p_evolve.add_argument("--t-max", type=float, required=True, dest="t_max",
                          help="evolution span in s")
    p_evolve.add_argument("--steps", type=int, default=256,
                          help="uniform grid intervals (default 256)")
    p_evolve.add_argument("--evaporate", action="store_true",
                          help="let the mass shrink by Hawking emission")
    p_evolve.add_argument("--species", type=int, default=1)
    add_common(p_evolve)
    p_evolve.set_defaults(func=cmd_evolve)

    p_verify = sub.add_parser("verify", help="run the self-check battery")
    add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
