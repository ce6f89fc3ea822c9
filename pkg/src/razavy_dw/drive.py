"""Time-dependent external fields applied to the two wells.

A drive is described by the pair of scalar fields (F1(t), F2(t)) acting on
particle 1 and particle 2.  Symmetric and antisymmetric shapes return the
two components computed from one expression, so their sum or difference
vanishes exactly in floating point and the corresponding selection rules
hold to machine precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = ["DriveField", "DRIVE_KINDS", "eval_field"]

DRIVE_KINDS = (
    "none",
    "sinusoidal-symmetric",
    "step-symmetric",
    "sinusoidal-antisymmetric",
    "sinusoidal-first-well-only",
    "general-per-well",
)

_SINUSOIDAL = (
    "sinusoidal-symmetric",
    "sinusoidal-antisymmetric",
    "sinusoidal-first-well-only",
)


@dataclass(frozen=True)
class DriveField:
    """One drive configuration.

    kind    one of DRIVE_KINDS
    f       field amplitude (peak value)
    omega   angular frequency, used by the sinusoidal kinds
    custom  pair of callables (F1, F2) for kind 'general-per-well'
    """

    kind: str
    f: float = 0.0
    omega: float = 0.0
    custom: tuple[Callable[[float], float], Callable[[float], float]] | None = None

    def __post_init__(self) -> None:
        if self.kind not in DRIVE_KINDS:
            raise ValueError(f"unknown drive kind {self.kind!r}")
        if self.f < 0.0:
            raise ValueError("field amplitude must be non-negative")
        if self.kind in _SINUSOIDAL and self.omega <= 0.0:
            raise ValueError("sinusoidal drives need omega > 0")
        if self.kind == "general-per-well" and self.custom is None:
            raise ValueError("general-per-well drive needs the custom field pair")

    # -- constructors ---------------------------------------------------

    @classmethod
    def none(cls) -> "DriveField":
        return cls(kind="none")

    @classmethod
    def sinusoidal(cls, f: float, omega: float) -> "DriveField":
        """f sin(omega t) on both wells."""
        return cls(kind="sinusoidal-symmetric", f=f, omega=omega)

    @classmethod
    def step(cls, f: float) -> "DriveField":
        """Constant field f on both wells, switched on at t = 0."""
        return cls(kind="step-symmetric", f=f)

    @classmethod
    def antisymmetric(cls, f: float, omega: float) -> "DriveField":
        """f sin(omega t) on well 1, opposite sign on well 2."""
        return cls(kind="sinusoidal-antisymmetric", f=f, omega=omega)

    @classmethod
    def first_well_only(cls, f: float, omega: float) -> "DriveField":
        """f sin(omega t) on well 1 only."""
        return cls(kind="sinusoidal-first-well-only", f=f, omega=omega)

    @classmethod
    def per_well(
        cls,
        f1: Callable[[float], float],
        f2: Callable[[float], float],
    ) -> "DriveField":
        return cls(kind="general-per-well", custom=(f1, f2))

    @classmethod
    def from_samples(cls, times, f1_values, f2_values) -> "DriveField":
        """Piecewise-linear fields from sampled values (constant outside)."""
        t = np.asarray(times, dtype=float)
        v1 = np.asarray(f1_values, dtype=float)
        v2 = np.asarray(f2_values, dtype=float)
        if t.ndim != 1 or t.size < 2:
            raise ValueError("need at least two sample times")
        if v1.shape != t.shape or v2.shape != t.shape:
            raise ValueError("sample arrays must match the time grid")
        if np.any(np.diff(t) <= 0.0):
            raise ValueError("sample times must be strictly increasing")

        def interp(values):
            return lambda x: float(np.interp(x, t, values))

        return cls(kind="general-per-well", custom=(interp(v1), interp(v2)))


def eval_field(drive: DriveField, t: float) -> tuple[float, float]:
    """Field pair (F1, F2) at time t."""
    kind = drive.kind
    if kind == "none":
        return (0.0, 0.0)
    if kind == "step-symmetric":
        # switched on at t = 0, inclusive
        F = drive.f if t >= 0.0 else 0.0
        return (F, F)
    if kind == "general-per-well":
        f1, f2 = drive.custom
        return (float(f1(t)), float(f2(t)))
    F = drive.f * math.sin(drive.omega * t)
    if kind == "sinusoidal-symmetric":
        return (F, F)
    if kind == "sinusoidal-antisymmetric":
        return (F, -F)
    return (F, 0.0)  # sinusoidal-first-well-only
