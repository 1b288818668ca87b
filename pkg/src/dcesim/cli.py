"""Command-line front end with deterministic CSV/JSON emission.

Subcommands map one-to-one onto the physics modules: spectrum, thermal,
response, rwa, evolve, mirror, plus fig1, which emits the thermal-vs-vacuum
photon-number sweep (duration grid; vacuum curve, thermal curve, thermal
floor and half-variance band) used by the standalone figures renderer.

Frequencies on the command line are always angular (rad/s). The
--freq-ghz-angular convenience flag means X * 1e9 rad/s - note this is
*not* 2 pi X GHz; cavity-size and frequency knobs are deliberately
independent inputs.

Defaults may be placed in an INI-style config file (one section per
subcommand, flat key = value entries, keys named like the long options);
command-line flags override the file. Exit codes: 0 success, 2 config
error, 3 numerical-tolerance failure. Identical configuration yields
byte-identical output (floats printed with %.17g, newline '\\n').
"""

from __future__ import annotations

import argparse
import configparser
import csv
import io
import json
import math
import sys

import numpy as np

from . import cavity, dynamics, fock, mirror, response, thermal
from .errors import (ConsistencyError, CutoffTooSmallError, DomainError,
                     NumericalToleranceError)
from .units import Temperature


class ConfigError(ValueError):
    pass


def _fmt(x) -> str:
    return f"{float(x):.17g}"


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ConfigError(f"--{name.replace('_', '-')} is required")


def _label_str(label) -> str:
    if isinstance(label, tuple):
        return "(" + ",".join(str(int(n)) for n in label) + ")"
    return str(label)


def _resolve_omega(args) -> float:
    ghz = getattr(args, "freq_ghz_angular", None)
    if ghz is not None:
        if args.omega is not None:
            raise ConfigError("give either --omega or --freq-ghz-angular, not both")
        return ghz * 1e9
    if args.omega is None:
        raise ConfigError("a frequency is required (--omega rad/s or --freq-ghz-angular)")
    return args.omega


def _geometry(args) -> cavity.Geometry:
    if args.geometry is None or args.length is None:
        raise ConfigError("--geometry and --length are required")
    kind = {"1d": "one_dimensional", "one_dimensional": "one_dimensional",
            "cubic": "cubic"}.get(args.geometry)
    if kind is None:
        raise ConfigError(f"unknown geometry {args.geometry!r}")
    return cavity.Geometry(kind, args.length)


# ---------------------------------------------------------------------------
# subcommand implementations: each returns (columns, rows)


def cmd_spectrum(args):
    spectrum = cavity.build_spectrum(_geometry(args), args.max_index)
    rows = [[_label_str(lbl), _fmt(freq)] for lbl, freq in spectrum.modes]
    return ["label", "frequency_rad_per_s"], rows


def cmd_thermal(args):
    _require(args, "temp")
    temperature = Temperature(args.temp)
    if args.omega is not None or getattr(args, "freq_ghz_angular", None) is not None:
        modes = [("1", _resolve_omega(args))]
    else:
        spectrum = cavity.build_spectrum(_geometry(args), args.max_index)
        modes = [(_label_str(lbl), f) for lbl, f in spectrum.modes]
    rows = []
    for label, freq in modes:
        n = thermal.bose_occupation(freq, temperature)
        rows.append([label, _fmt(freq), _fmt(n), _fmt(1.0 + 2.0 * n),
                     _fmt(math.sqrt(n * (n + 1.0)))])
    return ["label", "frequency", "occupation", "enhancement", "variance"], rows


def _response_grid(omega: float, duration: float, points_per_period: int) -> np.ndarray:
    # drive sin(2wt) has period pi/w; even interval count for Simpson
    periods = max(duration * omega / math.pi, 1.0)
    n = int(math.ceil(periods * points_per_period / 2.0)) * 2
    return dynamics.time_grid(duration, n)


def cmd_response(args):
    _require(args, "epsilon", "duration")
    omega = _resolve_omega(args)
    temperature = Temperature(args.temp)
    spec = dynamics.standard_drive(args.epsilon, omega, args.duration,
                                   n_modes=args.modes)
    grid = _response_grid(omega, args.duration, args.grid_points_per_period)
    matrices = dynamics.extract_perturbation_matrices(spec, grid)
    ensemble = thermal.ThermalEnsemble(temperature, spec.spectrum)
    result = response.quadratic_response(matrices, ensemble)
    rows = []
    for mu, label in enumerate(spec.spectrum.labels):
        rows.append([_label_str(label), _fmt(result.squeeze_part[mu]),
                     _fmt(result.hop_part[mu]), _fmt(result.delta_n[mu])])
    return ["mode", "dN_squeeze", "dN_hop", "dN_total"], rows


def cmd_rwa(args):
    _require(args, "epsilon", "duration")
    omega = _resolve_omega(args)
    temperature = Temperature(args.temp)
    if args.points < 1:
        raise ConfigError("--points must be >= 1")
    durations = (np.linspace(0.0, args.duration, args.points)
                 if args.points > 1 else np.array([args.duration]))
    rows = []
    for d in durations:
        r = response.rwa_photon_number(args.epsilon, omega, float(d), temperature)
        rows.append([_fmt(d), _fmt(r.total), _fmt(r.delta_n),
                     _fmt(r.vacuum_delta_n), _fmt(r.enhancement)])
    return ["T_duration_s", "N_total", "dN", "dN_vacuum", "enhancement"], rows


def cmd_fig1(args):
    omega = _resolve_omega(args)
    temperature = Temperature(args.temp)
    durations = np.linspace(0.0, args.duration_max, args.points)
    n0 = thermal.bose_occupation(omega, temperature) if not temperature.is_zero else 0.0
    sigma0 = math.sqrt(n0 * (n0 + 1.0))
    rows = []
    for d in durations:
        r = response.rwa_photon_number(args.epsilon, omega, float(d), temperature)
        # derive the emitted vacuum column from the rounded thermal total so
        # (N_thermal - floor)/N_vacuum reproduces the enhancement factor to
        # machine precision row by row; this moves N_vacuum off the exact
        # sinh^2 by at most the rounding of the n0 + dN sum (ulp level)
        recovered = r.total - n0
        vacuum = recovered / r.enhancement if recovered != 0.0 else 0.0
        rows.append([_fmt(d), _fmt(vacuum), _fmt(r.total),
                     _fmt(n0), _fmt(0.5 * sigma0)])
    return ["T_duration_s", "N_vacuum", "N_thermal", "thermal_floor",
            "variance_band"], rows


def cmd_evolve(args):
    _require(args, "epsilon", "duration")
    omega = _resolve_omega(args)
    temperature = Temperature(args.temp)
    spec = dynamics.standard_drive(args.epsilon, omega, args.duration,
                                   n_modes=args.modes)
    space = fock.FockSpace([args.cutoff] * args.modes)
    freqs = spec.spectrum.frequencies
    rho0 = fock.thermal_density_matrix(space, freqs, temperature)
    periods = max(args.duration * omega / math.pi, 1.0)
    n_steps = max(int(math.ceil(periods * args.steps_per_period)), 1)
    grid = dynamics.time_grid(args.duration, n_steps)
    result = dynamics.evolve(spec, space, rho0, grid,
                             record_stride=args.record_stride,
                             strict=args.strict)
    rows = []
    for i, tv in enumerate(result.times):
        row = [_fmt(tv)]
        row += [_fmt(result.numbers[i, mu]) for mu in range(args.modes)]
        row += [_fmt(result.entropies[i]), _fmt(result.trace_defects[i])]
        rows.append(row)
    columns = (["t"] + [f"N_{mu + 1}" for mu in range(args.modes)]
               + ["entropy", "trace_defect"])
    return columns, rows


def cmd_mirror(args):
    _require(args, "amplitude")
    if args.temps is not None:
        temps = [float(x) for x in args.temps.split(",") if x.strip() != ""]
    else:
        temps = [args.temp]
    traj = mirror.SinusoidTrajectory(args.amplitude / 299792458.0, _resolve_omega(args),
                                     args.periods,
                                     samples_per_period=args.samples_per_period)
    rows = []
    for kelvin in temps:
        res = mirror.radiated_energy(traj, Temperature(kelvin))
        rows.append([_fmt(kelvin), _fmt(res.vacuum), _fmt(res.thermal),
                     _fmt(res.total), _fmt(res.ratio)])
    return ["T_kelvin", "E_vacuum", "E_thermal", "E_total", "ratio"], rows


# ---------------------------------------------------------------------------
# parsing, config-file merging, output


def _add_common(sub):
    sub.add_argument("--output", "-o", default="-",
                     help="output path, or - for stdout (default)")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--config", default=None,
                     help="INI config file; section name = subcommand, "
                          "keys = option names; flags override the file")


def _add_omega(sub, required_note=""):
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--omega", type=float, default=None,
                       help=f"angular frequency in rad/s{required_note}")
    group.add_argument("--freq-ghz-angular", type=float, default=None,
                       help="X means X*1e9 rad/s (angular, NOT 2 pi X GHz)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dcesim",
        description="Photon creation from time-dependent cavity boundaries "
                    "at finite temperature")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("spectrum", help="cavity eigenmode table")
    p.add_argument("--geometry", choices=("1d", "cubic"), default=None)
    p.add_argument("--length", type=float, default=None, help="cavity size in m")
    p.add_argument("--max-index", type=int, default=5)
    _add_common(p)
    p.set_defaults(func=cmd_spectrum)

    p = subs.add_parser("thermal", help="Bose occupations of the modes")
    p.add_argument("--temp", type=float, default=None, help="temperature in K")
    _add_omega(p, " (single-mode table)")
    p.add_argument("--geometry", choices=("1d", "cubic"), default=None)
    p.add_argument("--length", type=float, default=None)
    p.add_argument("--max-index", type=int, default=5)
    _add_common(p)
    p.set_defaults(func=cmd_thermal)

    p = subs.add_parser("response", help="quadratic-response photon numbers")
    p.add_argument("--epsilon", type=float, default=None)
    _add_omega(p)
    p.add_argument("--duration", type=float, default=None, help="drive duration in s")
    p.add_argument("--temp", type=float, default=0.0)
    p.add_argument("--modes", type=int, default=1)
    p.add_argument("--grid-points-per-period", type=int, default=256)
    _add_common(p)
    p.set_defaults(func=cmd_response)

    p = subs.add_parser("rwa", help="rotating-wave closed-form photon number")
    p.add_argument("--epsilon", type=float, default=None)
    _add_omega(p)
    p.add_argument("--duration", type=float, default=None)
    p.add_argument("--temp", type=float, default=0.0)
    p.add_argument("--points", type=int, default=1,
                   help="rows on a 0..duration grid (1 = just the endpoint)")
    _add_common(p)
    p.set_defaults(func=cmd_rwa)

    p = subs.add_parser("evolve", help="exact truncated-Fock-space evolution")
    p.add_argument("--epsilon", type=float, default=None)
    _add_omega(p)
    p.add_argument("--duration", type=float, default=None)
    p.add_argument("--temp", type=float, default=0.0)
    p.add_argument("--modes", type=int, default=1)
    p.add_argument("--cutoff", type=int, default=40)
    p.add_argument("--steps-per-period", type=int, default=256)
    p.add_argument("--record-stride", type=int, default=None)
    p.add_argument("--strict", action="store_true",
                   help="escalate cutoff-saturation warnings to errors")
    _add_common(p)
    p.set_defaults(func=cmd_evolve)

    p = subs.add_parser("mirror", help="moving-mirror radiated energy")
    p.add_argument("--amplitude", type=float, default=None, help="stroke in m")
    _add_omega(p)
    p.add_argument("--periods", type=int, default=20)
    p.add_argument("--samples-per-period", type=int, default=2048)
    p.add_argument("--temp", type=float, default=0.0)
    p.add_argument("--temps", default=None, help="comma-separated K values")
    _add_common(p)
    p.set_defaults(func=cmd_mirror)

    p = subs.add_parser("fig1", help="thermal vs vacuum photon-number sweep")
    p.add_argument("--epsilon", type=float, default=6e-10)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--omega", type=float, default=1.46e11)
    group.add_argument("--freq-ghz-angular", type=float, default=None)
    p.add_argument("--temp", type=float, default=290.0)
    p.add_argument("--duration-max", type=float, default=0.05)
    p.add_argument("--points", type=int, default=500)
    _add_common(p)
    p.set_defaults(func=cmd_fig1)

    return parser


_BOOL_STRINGS = {"true": True, "1": True, "yes": True,
                 "false": False, "0": False, "no": False}


def _merge_config(parser, args, argv):
    """Re-parse with config-file values installed as subcommand defaults."""
    cfg = configparser.ConfigParser()
    read = cfg.read(args.config)
    if not read:
        raise ConfigError(f"cannot read config file {args.config}")
    if not cfg.has_section(args.command):
        return args
    sub = next(a for a in parser._subparsers._group_actions[0].choices.values()
               if a.get_default("func") is args.func)
    actions = {a.dest: a for a in sub._actions}
    overrides = {}
    for key, raw in cfg.items(args.command):
        dest = key.replace("-", "_")
        if dest not in actions:
            raise ConfigError(f"unknown option {key!r} in section [{args.command}]")
        action = actions[dest]
        if isinstance(action, (argparse._StoreTrueAction, argparse._StoreFalseAction)):
            if raw.lower() not in _BOOL_STRINGS:
                raise ConfigError(f"bad boolean {raw!r} for {key!r}")
            overrides[dest] = _BOOL_STRINGS[raw.lower()]
        elif action.type is not None:
            try:
                overrides[dest] = action.type(raw)
            except ValueError as exc:
                raise ConfigError(f"bad value {raw!r} for {key!r}: {exc}") from None
        else:
            overrides[dest] = raw
    sub.set_defaults(**overrides)
    return parser.parse_args(argv)


def _emit(args, columns, rows) -> str:
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
        return buf.getvalue()
    config_echo = {k: v for k, v in sorted(vars(args).items())
                   if k not in ("func",) and not k.startswith("_")}
    typed_rows = [[_json_cell(c) for c in row] for row in rows]
    return json.dumps({"config": config_echo, "rows": typed_rows},
                      sort_keys=True, separators=(",", ":")) + "\n"


def _json_cell(cell):
    try:
        return float(cell)
    except (TypeError, ValueError):
        return cell


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.config is not None:
            args = _merge_config(parser, args, argv)
        columns, rows = args.func(args)
        text = _emit(args, columns, rows)
        if args.output == "-":
            sys.stdout.write(text)
        else:
            with open(args.output, "w", newline="") as fh:
                fh.write(text)
    except (ConfigError, DomainError, configparser.Error) as exc:
        print(f"error: config: {_one_line(exc)}", file=sys.stderr)
        return 2
    except (NumericalToleranceError, CutoffTooSmallError, ConsistencyError) as exc:
        print(f"error: numerical: {_one_line(exc)}", file=sys.stderr)
        return 3
    return 0


def _one_line(exc) -> str:
    return " ".join(str(exc).split())


if __name__ == "__main__":
    sys.exit(main())
