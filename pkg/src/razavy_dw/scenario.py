"""Scenario files: declarative descriptions of one simulation run.

A scenario is a TOML file with five sections.  Example:

    [system]
    xi = 1.0
    g = 0.01

    [drive]
    kind = "sinusoidal-symmetric"
    f = 0.02
    omega_ratio = 1.0      # in units of the 1-0 gap; or absolute omega

    [initial]
    kind = "ground"        # ground | wavepacket | custom

    [run]
    t_max = 400.0
    dt_out = 0.5
    methods = ["exact", "rwa"]

    [outputs]
    populations = true
    positions = true
    correlation = true
    concurrence = true
    averages = false
    grid_times = []

Parsing problems (unreadable file, bad syntax, wrong types, unknown keys)
raise ScenarioParseError; a well-formed file describing an impossible run
raises ScenarioValidationError.  The CLI maps these to exit codes 2 and 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

try:
    import tomllib
except ImportError:  # Python 3.10
    import tomli as tomllib

from .coupled import CoupledSystem, build_coupled
from .drive import DRIVE_KINDS, DriveField
from .dynamics import InitialState
from .potential import PotentialParams, normalization_and_gamma

__all__ = [
    "Scenario",
    "ScenarioError",
    "ScenarioParseError",
    "ScenarioValidationError",
    "load_scenario",
    "build_system",
    "resolve_drive",
    "bundled_scenario_dir",
]

METHODS = ("exact", "rwa", "tla")
OUTPUT_FLAGS = ("populations", "positions", "correlation", "concurrence", "averages")

_RWA_KINDS = ("sinusoidal-symmetric", "sinusoidal-first-well-only")


class ScenarioError(Exception):
    """Base class for scenario problems."""


class ScenarioParseError(ScenarioError):
    """File unreadable, malformed, wrong types, or unknown keys."""


class ScenarioValidationError(ScenarioError):
    """Well-formed file describing an invalid run."""


@dataclass(frozen=True)
class Scenario:
    name: str
    params: PotentialParams
    g: float
    drive_kind: str
    f: float
    omega: float | None          # absolute frequency, or
    omega_ratio: float | None    # multiple of the 1-0 gap
    drive_samples: tuple | None  # (times, f1, f2) for general-per-well
    initial: InitialState
    t_max: float
    dt_out: float
    methods: tuple[str, ...]
    outputs: tuple[str, ...]
    grid_times: tuple[float, ...]
    grid_points: int
    grid_extent: float
    average_window: float
    average_dt: float


_SCHEMA = {
    "system": {"hbar": float, "mass": float, "xi": float, "g": float},
    "drive": {
        "kind": str,
        "f": float,
        "omega": float,
        "omega_ratio": float,
        "times": list,
        "f1_values": list,
        "f2_values": list,
    },
    "initial": {"kind": str, "amplitudes": list},
    "run": {"t_max": float, "dt_out": float, "methods": list},
    "outputs": {
        "populations": bool,
        "positions": bool,
        "correlation": bool,
        "concurrence": bool,
        "averages": bool,
        "grid_times": list,
        "grid_points": int,
        "grid_extent": float,
        "average_window": float,
        "average_dt": float,
    },
}


def _check_tables(data: dict) -> None:
    for section, table in data.items():
        if section not in _SCHEMA:
            raise ScenarioParseError(f"unknown section [{section}]")
        if not isinstance(table, dict):
            raise ScenarioParseError(f"[{section}] must be a table")
        for key, value in table.items():
            expected = _SCHEMA[section].get(key)
            if expected is None:
                raise ScenarioParseError(f"unknown key {key!r} in [{section}]")
            if expected is float:
                if isinstance(value, bool) or not isinstance(value, (int, float)):
                    raise ScenarioParseError(f"{section}.{key} must be a number")
            elif expected is int:
                if isinstance(value, bool) or not isinstance(value, int):
                    raise ScenarioParseError(f"{section}.{key} must be an integer")
            elif not isinstance(value, expected):
                raise ScenarioParseError(
                    f"{section}.{key} must be of type {expected.__name__}"
                )


def _number_list(values, where: str) -> tuple[float, ...]:
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ScenarioParseError(f"{where} must contain numbers only")
        out.append(float(v))
    return tuple(out)


def _parse_initial(table: dict) -> InitialState:
    kind = table.get("kind", "ground")
    if kind == "ground":
        return InitialState.ground()
    if kind == "wavepacket":
        return InitialState.wavepacket()
    if kind == "custom":
        raw = table.get("amplitudes")
        if raw is None:
            raise ScenarioParseError("initial.amplitudes required for kind 'custom'")
        amps = []
        for entry in raw:
            if not isinstance(entry, list) or len(entry) != 2:
                raise ScenarioParseError(
                    "initial.amplitudes must be four [re, im] pairs"
                )
            re, im = entry
            for v in (re, im):
                if isinstance(v, bool) or not isinstance(v, (int, float)):
                    raise ScenarioParseError("amplitude parts must be numbers")
            amps.append(complex(re, im))
        if len(amps) != 4:
            raise ScenarioParseError("initial.amplitudes must have four entries")
        try:
            return InitialState.from_amplitudes(amps)
        except ValueError as exc:
            raise ScenarioValidationError(str(exc)) from None
    raise ScenarioValidationError(f"unknown initial kind {kind!r}")


def load_scenario(path) -> Scenario:
    """Parse and validate one scenario file."""
    path = Path(path)
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except OSError as exc:
        raise ScenarioParseError(f"cannot read {path}: {exc}") from None
    except tomllib.TOMLDecodeError as exc:
        raise ScenarioParseError(f"{path}: {exc}") from None
    _check_tables(data)

    system = data.get("system", {})
    try:
        params = PotentialParams(
            hbar=float(system.get("hbar", 1.0)),
            mass=float(system.get("mass", 1.0)),
            xi=float(system.get("xi", 1.0)),
        )
    except ValueError as exc:
        raise ScenarioValidationError(str(exc)) from None
    g = float(system.get("g", 0.0))
    if g < 0.0:
        raise ScenarioValidationError("system.g must be non-negative")

    drv = data.get("drive", {})
    kind = drv.get("kind", "none")
    if kind not in DRIVE_KINDS:
        raise ScenarioValidationError(f"unknown drive kind {kind!r}")
    f = float(drv.get("f", 0.0))
    if f < 0.0:
        raise ScenarioValidationError("drive.f must be non-negative")
    omega = drv.get("omega")
    omega_ratio = drv.get("omega_ratio")
    samples = None
    sinusoidal = kind.startswith("sinusoidal")
    if sinusoidal:
        if (omega is None) == (omega_ratio is None):
            raise ScenarioValidationError(
                "sinusoidal drives need exactly one of drive.omega, drive.omega_ratio"
            )
        value = omega if omega is not None else omega_ratio
        if float(value) <= 0.0:
            raise ScenarioValidationError("drive frequency must be positive")
    else:
        if omega is not None or omega_ratio is not None:
            raise ScenarioValidationError(f"drive kind {kind!r} takes no frequency")
    if kind == "general-per-well":
        missing = [k for k in ("times", "f1_values", "f2_values") if k not in drv]
        if missing:
            raise ScenarioValidationError(
                f"general-per-well drive needs keys {missing}"
            )
        samples = (
            _number_list(drv["times"], "drive.times"),
            _number_list(drv["f1_values"], "drive.f1_values"),
            _number_list(drv["f2_values"], "drive.f2_values"),
        )
        if len({len(s) for s in samples}) != 1 or len(samples[0]) < 2:
            raise ScenarioValidationError(
                "drive sample arrays must share a length of at least 2"
            )

    initial = _parse_initial(data.get("initial", {}))

    run = data.get("run", {})
    t_max = float(run.get("t_max", 0.0))
    dt_out = float(run.get("dt_out", 0.5))
    if t_max <= 0.0:
        raise ScenarioValidationError("run.t_max must be positive")
    if dt_out <= 0.0 or dt_out > t_max:
        raise ScenarioValidationError("run.dt_out must lie in (0, t_max]")
    raw_methods = run.get("methods", [])
    methods: list[str] = []
    for m in raw_methods:
        if not isinstance(m, str) or m not in METHODS:
            raise ScenarioValidationError(f"unknown method {m!r}")
        if m not in methods:
            methods.append(m)
    if not methods:
        raise ScenarioValidationError("run.methods must select at least one method")

    out = data.get("outputs", {})
    flags = tuple(name for name in OUTPUT_FLAGS if out.get(name, False))
    grid_times = _number_list(out.get("grid_times", []), "outputs.grid_times")
    if not flags and not grid_times:
        raise ScenarioValidationError("no outputs selected")
    grid_points = int(out.get("grid_points", 201))
    grid_extent = float(out.get("grid_extent", 3.0))
    if grid_points < 2:
        raise ScenarioValidationError("outputs.grid_points must be at least 2")
    if grid_extent <= 0.0:
        raise ScenarioValidationError("outputs.grid_extent must be positive")
    for gt in grid_times:
        if gt < 0.0 or gt > t_max + 1e-9:
            raise ScenarioValidationError("grid times must lie in [0, t_max]")
        ratio = gt / dt_out
        if abs(ratio - round(ratio)) > 1e-9:
            raise ScenarioValidationError(
                "grid times must be multiples of dt_out"
            )
    average_window = float(out.get("average_window", 1e5))
    average_dt = float(out.get("average_dt", 1.0))
    if average_window <= 0.0 or average_dt <= 0.0:
        raise ScenarioValidationError("averaging window and step must be positive")

    # method/drive compatibility
    if "rwa" in methods and kind not in _RWA_KINDS:
        raise ScenarioValidationError(
            "method 'rwa' needs a sinusoidal-symmetric or "
            "sinusoidal-first-well-only drive"
        )
    if "tla" in methods:
        if kind != "step-symmetric":
            raise ScenarioValidationError("method 'tla' needs a step-symmetric drive")
        if initial.label != "ground":
            raise ScenarioValidationError("method 'tla' needs the ground initial state")
    if "rwa" in methods:
        a = initial.amplitudes
        if abs(a[2]) > 1e-12 or abs(a[3]) > 1e-12:
            raise ScenarioValidationError(
                "method 'rwa' needs zero initial a2 and a3"
            )

    return Scenario(
        name=path.stem,
        params=params,
        g=g,
        drive_kind=kind,
        f=f,
        omega=None if omega is None else float(omega),
        omega_ratio=None if omega_ratio is None else float(omega_ratio),
        drive_samples=samples,
        initial=initial,
        t_max=t_max,
        dt_out=dt_out,
        methods=tuple(methods),
        outputs=flags,
        grid_times=grid_times,
        grid_points=grid_points,
        grid_extent=grid_extent,
        average_window=average_window,
        average_dt=average_dt,
    )


def build_system(scenario: Scenario) -> CoupledSystem:
    """Quadrature-normalized basis plus closed-form coupling."""
    basis = normalization_and_gamma(scenario.params)
    return build_coupled(basis, scenario.g)


def resolve_drive(scenario: Scenario, sys: CoupledSystem) -> DriveField:
    """Concrete field, with ratio frequencies resolved against the 1-0 gap."""
    kind = scenario.drive_kind
    if kind == "none":
        return DriveField.none()
    if kind == "step-symmetric":
        return DriveField.step(scenario.f)
    if kind == "general-per-well":
        t, f1, f2 = scenario.drive_samples
        return DriveField.from_samples(t, f1, f2)
    omega = scenario.omega
    if omega is None:
        omega = scenario.omega_ratio * sys.delta10
    return DriveField(kind=kind, f=scenario.f, omega=omega)


def bundled_scenario_dir() -> Path:
    """Directory holding the scenario files shipped with the package."""
    return Path(str(resources.files("razavy_dw").joinpath("scenarios")))
