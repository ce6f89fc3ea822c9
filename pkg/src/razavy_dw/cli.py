"""Command-line front end.

Three subcommands:

    razavy-dw run <scenario.toml> [--out DIR]   data files for one scenario
    razavy-dw eigen --g G [--xi XI]             closed-form constants table
    razavy-dw sweep --param P --from A --to B --steps N <scenario.toml>

`run` writes one CSV per requested method plus optional grid snapshots
(JSON) and an averages summary (JSON).  Output is deterministic: the same
scenario and version give byte-identical files.  `--machine` switches all
numbers to full round-trip precision (17 significant digits); the default
is a human-friendly 6.  Exit codes: 0 success, 2 parse problem, 3 invalid
semantics, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys as _sys
from pathlib import Path

import numpy as np

from .analytic import (
    RwaSolution,
    rwa_amplitudes,
    rwa_single_well_drive,
    rwa_solve,
    rwa_time_averages,
    rwa_validity_warning,
    tla_step_amplitudes,
)
from .coupled import CoupledSystem, build_coupled
from .dynamics import AmplitudeState, IntegrationError, integrate
from .observables import (
    ObservableSeries,
    density_grid,
    grid_norm,
    rwa_concurrence,
    rwa_correlation,
    series_from_amplitudes,
    trapezoid_mean,
)
from .potential import PotentialParams, normalization_and_gamma
from .scenario import (
    Scenario,
    ScenarioParseError,
    ScenarioValidationError,
    build_system,
    load_scenario,
    resolve_drive,
)

__all__ = ["main", "run_scenario"]

CSV_HEADER = "t,p0,p1,p2,p3,x1,x2,x_sum,gamma,conc"

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SEMANTIC = 3
EXIT_NUMERIC = 4


def _fmt(value: float, machine: bool) -> str:
    return format(value, ".16e") if machine else format(value, ".5e")


def _round6(value: float) -> float:
    return float(format(value, ".5e"))


def _jsonable(value, machine: bool):
    """Floats (scalars, lists, nested lists) ready for json.dumps."""
    if isinstance(value, (list, tuple)):
        return [_jsonable(v, machine) for v in value]
    if isinstance(value, np.ndarray):
        return _jsonable(value.tolist(), machine)
    if isinstance(value, float):
        return value if machine else _round6(value)
    return value


def _err(message: str) -> None:
    print(f"razavy-dw: error: {message}", file=_sys.stderr)


def _warn(message: str, quiet: bool) -> None:
    if not quiet:
        print(f"razavy-dw: warning: {message}", file=_sys.stderr)


# -- run ------------------------------------------------------------------


def _write_series_csv(
    path: Path, series: ObservableSeries, outputs, machine: bool
) -> None:
    want_pop = "populations" in outputs
    want_pos = "positions" in outputs
    want_corr = "correlation" in outputs
    want_conc = "concurrence" in outputs
    lines = [CSV_HEADER]
    pops = series.populations
    for i, t in enumerate(series.times):
        cells = [_fmt(float(t), machine)]
        if want_pop:
            cells.extend(_fmt(float(pops[i, k]), machine) for k in range(4))
        else:
            cells.extend([""] * 4)
        if want_pos:
            cells.append(_fmt(float(series.x1[i]), machine))
            cells.append(_fmt(float(series.x2[i]), machine))
            cells.append(_fmt(float(series.x_sum[i]), machine))
        else:
            cells.extend([""] * 3)
        cells.append(_fmt(float(series.corr[i]), machine) if want_corr else "")
        cells.append(_fmt(float(series.conc[i]), machine) if want_conc else "")
        lines.append(",".join(cells))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _method_amplitudes(
    method: str, scenario: Scenario, sysm: CoupledSystem, drive, times
):
    """Amplitude array of shape (n, 4) for one computation method."""
    if method == "exact":
        traj = integrate(
            scenario.initial, sysm, drive, scenario.t_max, scenario.dt_out
        )
        return traj.amplitudes, None
    if method == "rwa":
        if scenario.drive_kind == "sinusoidal-first-well-only":
            sol = rwa_single_well_drive(scenario.initial, sysm, drive.f, drive.omega)
        else:
            sol = rwa_solve(scenario.initial, sysm, drive.f, drive.omega)
        return rwa_amplitudes(sol, times), sol
    # tla: ground start enforced during validation
    return tla_step_amplitudes(sysm, scenario.f, times), None


def _averages_payload(
    scenario: Scenario,
    sysm: CoupledSystem,
    sols: dict[str, RwaSolution | None],
    series: dict[str, ObservableSeries],
    machine: bool,
) -> dict:
    results: dict[str, dict] = {}
    for method in scenario.methods:
        entry: dict[str, dict] = {}
        sol = sols.get(method)
        if method == "rwa" and sol is not None:
            corr_cf, conc_cf = rwa_time_averages(sol, sysm)
            n = int(math.floor(scenario.average_window / scenario.average_dt)) + 1
            ts = np.arange(n) * scenario.average_dt
            period = 2.0 * math.pi / sol.Omega if sol.Omega > 0.0 else None
            corr_num = trapezoid_mean(
                ts, rwa_correlation(sol, sysm, ts) ** 2, period=period
            )
            conc_num = trapezoid_mean(
                ts, rwa_concurrence(sol, sysm, ts) ** 2, period=period
            )
            entry["corr_sq"] = {"closed_form": corr_cf, "numeric": corr_num}
            entry["conc_sq"] = {"closed_form": conc_cf, "numeric": conc_num}
        else:
            ser = series[method]
            entry["corr_sq"] = {"numeric": trapezoid_mean(ser.times, ser.corr**2)}
            entry["conc_sq"] = {"numeric": trapezoid_mean(ser.times, ser.conc**2)}
        results[method] = entry
    payload = {
        "window": scenario.average_window,
        "dt": scenario.average_dt,
        "results": results,
    }
    return _jsonable_dict(payload, machine)


def _jsonable_dict(obj, machine: bool):
    if isinstance(obj, dict):
        return {k: _jsonable_dict(v, machine) for k, v in obj.items()}
    return _jsonable(obj, machine)


def _grid_payload(grid, machine: bool) -> dict:
    payload = {
        "t": grid.t,
        "x1_axis": grid.x1_axis.tolist(),
        "x2_axis": grid.x2_axis.tolist(),
        "values": grid.values.tolist(),
        "norm_check": grid_norm(grid),
    }
    return _jsonable_dict(payload, machine)


def run_scenario(
    path, out_dir=".", *, machine: bool = False, quiet: bool = False
) -> int:
    """Execute one scenario file; returns the process exit code."""
    try:
        scenario = load_scenario(path)
    except ScenarioParseError as exc:
        _err(str(exc))
        return EXIT_PARSE
    except ScenarioValidationError as exc:
        _err(str(exc))
        return EXIT_SEMANTIC

    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        _err(f"cannot create output directory {out}: {exc}")
        return EXIT_SEMANTIC

    sysm = build_system(scenario)
    drive = resolve_drive(scenario, sysm)

    if "rwa" in scenario.methods:
        message = rwa_validity_warning(sysm, drive.f, drive.omega)
        if message:
            _warn(message, quiet)

    n_out = int(math.floor(scenario.t_max / scenario.dt_out + 1e-9))
    times = np.arange(n_out + 1) * scenario.dt_out

    all_amps: dict[str, np.ndarray] = {}
    all_series: dict[str, ObservableSeries] = {}
    sols: dict[str, RwaSolution | None] = {}
    for method in scenario.methods:
        try:
            amps, sol = _method_amplitudes(method, scenario, sysm, drive, times)
        except IntegrationError as exc:
            _err(str(exc))
            return EXIT_NUMERIC
        all_amps[method] = np.asarray(amps)
        sols[method] = sol
        series = series_from_amplitudes(times, all_amps[method], scenario.initial, sysm)
        all_series[method] = series
        csv_path = out / f"{scenario.name}_{method}.csv"
        _write_series_csv(csv_path, series, scenario.outputs, machine)
        if not quiet:
            print(csv_path)

    if scenario.grid_times:
        source = "exact" if "exact" in scenario.methods else scenario.methods[0]
        amps = all_amps[source]
        for gt in scenario.grid_times:
            idx = int(round(gt / scenario.dt_out))
            state = AmplitudeState(t=float(gt), a=amps[idx])
            try:
                grid = density_grid(
                    state,
                    sysm,
                    n_points=scenario.grid_points,
                    extent=scenario.grid_extent,
                )
            except ValueError as exc:
                _err(str(exc))
                return EXIT_NUMERIC
            grid_path = out / f"{scenario.name}_grid_t{format(gt, 'g')}.json"
            grid_path.write_text(
                json.dumps(_grid_payload(grid, machine), sort_keys=True,
                           separators=(",", ":")) + "\n",
                encoding="utf-8",
                newline="\n",
            )
            if not quiet:
                print(grid_path)

    if "averages" in scenario.outputs:
        payload = _averages_payload(scenario, sysm, sols, all_series, machine)
        avg_path = out / f"{scenario.name}_averages.json"
        avg_path.write_text(
            json.dumps(payload, sort_keys=True, indent=2) + "\n",
            encoding="utf-8",
            newline="\n",
        )
        if not quiet:
            print(avg_path)
    return EXIT_OK


# -- eigen ------------------------------------------------------------------


_EIGEN_ROWS = (
    "eps0", "eps1", "eps2", "eps3", "delta", "eps_sum", "gamma",
    "E0", "E1", "E2", "E3", "theta", "alpha", "beta", "Delta10",
)


def _eigen_values(g: float, xi: float) -> dict[str, float]:
    basis = normalization_and_gamma(PotentialParams(xi=xi))
    sysm = build_coupled(basis, g)
    vals = {
        "eps0": basis.eps[0],
        "eps1": basis.eps[1],
        "eps2": basis.eps[2],
        "eps3": basis.eps[3],
        "delta": basis.delta,
        "eps_sum": basis.eps[0] + basis.eps[1],
        "gamma": basis.gamma,
        "E0": sysm.energies[0],
        "E1": sysm.energies[1],
        "E2": sysm.energies[2],
        "E3": sysm.energies[3],
        "theta": sysm.theta,
        "alpha": sysm.alpha,
        "beta": sysm.beta,
        "Delta10": sysm.delta10,
    }
    return vals


def _cmd_eigen(args) -> int:
    if args.g < 0.0:
        _err("coupling g must be non-negative")
        return EXIT_SEMANTIC
    try:
        vals = _eigen_values(args.g, args.xi)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_SEMANTIC
    digits = ".17g" if args.machine else ".6g"
    width = max(len(name) for name in _EIGEN_ROWS)
    for name in _EIGEN_ROWS:
        print(f"{name:<{width}}  {format(vals[name], digits)}")
    return EXIT_OK


# -- sweep ------------------------------------------------------------------


def _sweep_scenario(base: Scenario, param: str, value: float) -> Scenario:
    from dataclasses import replace

    if param == "g":
        return replace(base, g=value)
    if param == "f":
        return replace(base, f=value)
    # param == "omega": pin the absolute frequency, dropping any ratio
    return replace(base, omega=value, omega_ratio=None)


def _cmd_sweep(args) -> int:
    try:
        base = load_scenario(args.scenario)
    except ScenarioParseError as exc:
        _err(str(exc))
        return EXIT_PARSE
    except ScenarioValidationError as exc:
        _err(str(exc))
        return EXIT_SEMANTIC
    if args.steps < 2:
        _err("sweep needs at least two points")
        return EXIT_SEMANTIC
    if args.param == "omega" and not base.drive_kind.startswith("sinusoidal"):
        _err("omega sweep needs a sinusoidal drive")
        return EXIT_SEMANTIC
    if args.param == "f" and base.drive_kind == "none":
        _err("amplitude sweep needs a drive")
        return EXIT_SEMANTIC
    if args.param == "omega" and min(args.start, args.stop) <= 0.0:
        _err("omega values must be positive")
        return EXIT_SEMANTIC
    if args.param in ("f", "g") and min(args.start, args.stop) < 0.0:
        _err(f"{args.param} values must be non-negative")
        return EXIT_SEMANTIC

    methods = base.methods
    header = [args.param]
    for method in methods:
        header.append(f"corr_sq_avg_{method}")
        header.append(f"conc_sq_avg_{method}")
    print(",".join(header))
    _sys.stdout.flush()

    values = np.linspace(args.start, args.stop, args.steps)
    for value in values:
        scenario = _sweep_scenario(base, args.param, float(value))
        try:
            row = _sweep_point(scenario)
        except (ScenarioValidationError, IntegrationError, ValueError) as exc:
            print(f"# failed {args.param}={format(float(value), '.6g')}: {exc}")
            _sys.stdout.flush()
            _err(str(exc))
            return (
                EXIT_NUMERIC
                if isinstance(exc, IntegrationError)
                else EXIT_SEMANTIC
            )
        cells = [_fmt(float(value), args.machine)]
        for method in methods:
            corr_avg, conc_avg = row[method]
            cells.append(_fmt(corr_avg, args.machine))
            cells.append(_fmt(conc_avg, args.machine))
        print(",".join(cells))
        _sys.stdout.flush()
    return EXIT_OK


def _sweep_point(scenario: Scenario) -> dict[str, tuple[float, float]]:
    """Averaged squared correlation and concurrence per method."""
    sysm = build_system(scenario)
    drive = resolve_drive(scenario, sysm)
    n_out = int(math.floor(scenario.t_max / scenario.dt_out + 1e-9))
    times = np.arange(n_out + 1) * scenario.dt_out
    out: dict[str, tuple[float, float]] = {}
    for method in scenario.methods:
        if method == "rwa":
            if scenario.drive_kind == "sinusoidal-first-well-only":
                sol = rwa_single_well_drive(
                    scenario.initial, sysm, drive.f, drive.omega
                )
            else:
                sol = rwa_solve(scenario.initial, sysm, drive.f, drive.omega)
            out[method] = rwa_time_averages(sol, sysm)
            continue
        amps, _ = _method_amplitudes(method, scenario, sysm, drive, times)
        series = series_from_amplitudes(times, amps, scenario.initial, sysm)
        out[method] = (
            trapezoid_mean(series.times, series.corr**2),
            trapezoid_mean(series.times, series.conc**2),
        )
    return out


# -- entry point -------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="razavy-dw",
        description="Driven coupled double-well dynamics: scenarios, spectra, sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a scenario file")
    p_run.add_argument("scenario", help="scenario TOML file")
    p_run.add_argument("--out", default=".", help="output directory")
    p_run.add_argument("--machine", action="store_true",
                       help="full round-trip precision output")
    p_run.add_argument("--quiet", action="store_true",
                       help="suppress progress and warnings")

    p_eig = sub.add_parser("eigen", help="print the closed-form constants")
    p_eig.add_argument("--g", type=float, required=True, help="coupling strength")
    p_eig.add_argument("--xi", type=float, default=1.0, help="potential parameter")
    p_eig.add_argument("--machine", action="store_true",
                       help="full round-trip precision output")
    p_eig.add_argument("--quiet", action="store_true", help=argparse.SUPPRESS)

    p_swp = sub.add_parser("sweep", help="average observables across a parameter range")
    p_swp.add_argument("scenario", help="base scenario TOML file")
    p_swp.add_argument("--param", required=True, choices=("f", "g", "omega"))
    p_swp.add_argument("--from", dest="start", type=float, required=True)
    p_swp.add_argument("--to", dest="stop", type=float, required=True)
    p_swp.add_argument("--steps", type=int, required=True)
    p_swp.add_argument("--machine", action="store_true",
                       help="full round-trip precision output")
    p_swp.add_argument("--quiet", action="store_true",
                       help="suppress progress and warnings")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return run_scenario(
                args.scenario, args.out, machine=args.machine, quiet=args.quiet
            )
        if args.command == "eigen":
            return _cmd_eigen(args)
        return _cmd_sweep(args)
    except BrokenPipeError:
        # the reader went away (e.g. piped into head); not a failure of ours
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, _sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    _sys.exit(main())
