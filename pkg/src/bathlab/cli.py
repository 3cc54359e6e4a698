"""Command-line front end: CSV/JSON emitters for sweeps and reports.

All flags are dimensionless ratios in reduced units (gamma = M = hbar =
k_B = 1). CSV goes to stdout (or --out) with fixed 9-significant-digit
scientific formatting so identical invocations are byte-identical; the
oracle's JSON summary contains a runtime and therefore goes to stderr in
CSV mode. Exit codes: 0 success, 1 numerical failure, 2 invalid flags.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from bathlab import modeshift, oracle, thermo
from bathlab.bath import Drude
from bathlab.errors import BathlabError

_FORMATS = ("csv", "json")


def _fmt(x: float) -> str:
    return f"{float(x):.8e}"


def _jnum(x: float) -> float:
    # round-trip through the CSV formatting so both formats carry the same numbers
    return float(_fmt(x))


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table(header: list[str], rows: list[list[float]], fmt: str, out_path: str | None) -> None:
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        _emit("\n".join(lines) + "\n", out_path)
    else:
        payload = {
            "columns": header,
            "rows": [[_jnum(v) for v in row] for row in rows],
        }
        _emit(json.dumps(payload, indent=2) + "\n", out_path)


def _temperature_grid(args) -> np.ndarray:
    if args.log:
        return np.geomspace(args.t_min, args.t_max, args.points)
    return np.linspace(args.t_min, args.t_max, args.points)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--omega-d", type=float, required=True,
                   help="Drude cutoff in units of gamma")
    p.add_argument("--format", choices=_FORMATS, default=None,
                   help="output format (default: csv, anomaly: json)")
    p.add_argument("--out", default=None, help="write to file instead of stdout")


def _add_temperature_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--t-min", type=float, default=0.01)
    p.add_argument("--t-max", type=float, default=100.0)
    p.add_argument("--points", type=int, default=50)
    p.add_argument("--log", action="store_true", help="log-spaced temperature grid")


def _check(parser, ok: bool, message: str) -> None:
    if not ok:
        parser.error(message)  # exits 2


def cmd_density_shift(parser, args) -> int:
    _check(parser, args.omega_d > 0, "--omega-d must be positive")
    _check(parser, args.omega_max > 0, "--omega-max must be positive")
    _check(parser, args.points >= 2, "--points must be at least 2")
    sd = Drude(gamma=1.0, omega_d=args.omega_d)
    shift = modeshift.DensityShift(sd)
    grid = np.linspace(0.0, args.omega_max, args.points)
    values = shift(grid)
    header = ["omega", "delta_rho"]
    columns = [grid, values]
    if args.decompose:
        c1, c2, c3 = shift.components(grid)
        header += ["lor1", "lor2", "lor3"]
        columns += [c1, c2, c3]
    rows = [list(row) for row in zip(*columns)]
    _table(header, rows, args.format or "csv", args.out)
    return 0


def cmd_heat(parser, args) -> int:
    _check(parser, args.omega_d > 0, "--omega-d must be positive")
    _check(parser, args.t_min > 0, "--t-min must be positive")
    _check(parser, args.t_min < args.t_max, "--t-min must be below --t-max")
    _check(parser, args.points >= 2, "--points must be at least 2")
    sd = Drude(gamma=1.0, omega_d=args.omega_d)
    taus = _temperature_grid(args)
    if args.method == "closed":
        freqs = modeshift.characteristic_frequencies(1.0, args.omega_d)
        heats = [thermo.specific_heat_closed(freqs, t) for t in taus]
    elif args.method == "quadrature":
        heats = [thermo.specific_heat_quadrature(sd, t) for t in taus]
    else:
        slope = thermo.low_t_asymptote(sd).slope
        heats = [slope * t for t in taus]
    _table(["T", "C"], [[t, c] for t, c in zip(taus, heats)], args.format or "csv", args.out)
    return 0


def cmd_energy(parser, args) -> int:
    _check(parser, args.omega_d > 0, "--omega-d must be positive")
    freqs = modeshift.characteristic_frequencies(1.0, args.omega_d)
    if args.zero_point:
        payload = {"u0": _jnum(thermo.zero_point_energy(freqs))}
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    _check(parser, args.t_min > 0, "--t-min must be positive")
    _check(parser, args.t_min < args.t_max, "--t-min must be below --t-max")
    _check(parser, args.points >= 2, "--points must be at least 2")
    taus = _temperature_grid(args)
    energies = [thermo.internal_energy(freqs, t) for t in taus]
    _table(["T", "U"], [[t, u] for t, u in zip(taus, energies)], args.format or "csv", args.out)
    return 0


def cmd_anomaly(parser, args) -> int:
    _check(parser, args.omega_d > 0, "--omega-d must be positive")
    sd = Drude(gamma=1.0, omega_d=args.omega_d)
    report = sd.anomaly()
    slope = thermo.low_t_asymptote(sd).slope
    fmt = args.format or "json"
    if fmt == "json":
        payload = {
            "gamma_hat_prime_zero": _jnum(report.gamma_hat_prime_zero),
            "missing_mass_ratio": _jnum(report.missing_mass_ratio),
            "low_t_negative": report.low_t_specific_heat_negative,
            "low_t_slope": _jnum(slope),
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        header = "gamma_hat_prime_zero,missing_mass_ratio,low_t_negative,low_t_slope"
        row = ",".join(
            [
                _fmt(report.gamma_hat_prime_zero),
                _fmt(report.missing_mass_ratio),
                "true" if report.low_t_specific_heat_negative else "false",
                _fmt(slope),
            ]
        )
        _emit(header + "\n" + row + "\n", args.out)
    return 0


def cmd_oracle(parser, args) -> int:
    _check(parser, args.omega_d > 0, "--omega-d must be positive")
    _check(parser, args.delta > 0, "--delta must be positive")
    _check(parser, args.n_modes >= 1, "--n-modes must be at least 1")
    try:
        temps = [float(tok) for tok in args.temps.split(",") if tok.strip()]
    except ValueError:
        parser.error("--temps must be a comma-separated list of numbers")
    _check(parser, len(temps) >= 1, "--temps must name at least one temperature")
    _check(parser, all(t > 0 for t in temps), "temperatures must be positive")

    sd = Drude(gamma=1.0, omega_d=args.omega_d)
    freqs = modeshift.characteristic_frequencies(1.0, args.omega_d)
    start = time.perf_counter()
    bath = oracle.build_bath(sd, args.delta, args.n_modes)
    spectrum = oracle.coupled_spectrum(bath)
    runtime = time.perf_counter() - start

    omega = spectrum.eigenfrequencies
    interlacing_ok = bool(
        np.all(omega[:-1] > bath.frequencies[:-1])
        and np.all(omega[:-1] < bath.frequencies[1:])
        and omega[-1] > bath.frequencies[-1]
    )
    rows = []
    for t in temps:
        c_disc = oracle.discrete_specific_heat(bath, spectrum, t)
        c_cont = thermo.specific_heat_closed(freqs, t)
        rows.append([t, c_disc, c_cont, abs(c_disc - c_cont) / abs(c_cont)])

    summary = {
        "interlacing_ok": interlacing_ok,
        "max_secular_residual": _jnum(np.max(spectrum.secular_residuals)),
        "runtime": runtime,
        "n_modes": bath.n_modes,
        "delta": args.delta,
    }
    if bath.n_modes <= 8:
        summary["spectrum"] = [_jnum(v) for v in omega]

    header = ["T", "C_discrete", "C_continuum", "rel_err"]
    if (args.format or "csv") == "csv":
        _table(header, rows, "csv", args.out)
        sys.stderr.write(json.dumps(summary) + "\n")
    else:
        payload = {
            "columns": header,
            "rows": [[_jnum(v) for v in row] for row in rows],
            "summary": summary,
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0 if interlacing_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bathlab",
        description="Eigenmode-density shift and thermodynamics of an "
        "Ohmic-damped free quantum particle (reduced units).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("density-shift", help="eigenmode-density change vs frequency")
    _add_common(p)
    p.add_argument("--omega-max", type=float, default=10.0)
    p.add_argument("--points", type=int, default=500)
    p.add_argument("--decompose", action="store_true",
                   help="also emit the three Lorentzian components")
    p.set_defaults(func=cmd_density_shift)

    p = sub.add_parser("heat", help="specific heat vs temperature")
    _add_common(p)
    _add_temperature_flags(p)
    p.add_argument("--method", choices=("closed", "quadrature", "asymptotic"),
                   default="closed")
    p.set_defaults(func=cmd_heat)

    p = sub.add_parser("energy", help="internal-energy difference vs temperature")
    _add_common(p)
    _add_temperature_flags(p)
    p.add_argument("--zero-point", action="store_true",
                   help="print the zero-temperature energy as JSON and exit")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("anomaly", help="negative-specific-heat criterion report")
    _add_common(p)
    p.set_defaults(func=cmd_anomaly)

    p = sub.add_parser("oracle", help="finite-bath brute-force validation")
    _add_common(p)
    p.add_argument("--delta", type=float, default=0.02, help="grid spacing")
    p.add_argument("--n-modes", type=int, default=5000)
    p.add_argument("--temps", default="1", help="comma-separated temperatures")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except BathlabError as exc:
        sys.stderr.write(f"bathlab: numerical failure: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
