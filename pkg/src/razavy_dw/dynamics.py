"""Interaction-picture amplitude dynamics of the coupled pair.

The state is expanded over the four coupled eigenstates with the static
phases split off,

    |psi(t)> = sum_nu a_nu(t) exp(-i E_nu t / hbar) |Phi_nu>,

so the amplitudes obey

    i hbar da0/dt = -(alpha/2)(F1+F2) e^{-i D10 t} a1 - (beta/2)(F1-F2) e^{-i D20 t} a2
    i hbar da1/dt = -(alpha/2)(F1+F2) e^{+i D10 t} a0 - (beta/2)(F1+F2) e^{-i D31 t} a3
    i hbar da2/dt = -(beta/2)(F1-F2) e^{+i D20 t} a0 + (alpha/2)(F1-F2) e^{-i D32 t} a3
    i hbar da3/dt = -(beta/2)(F1+F2) e^{+i D31 t} a1 + (alpha/2)(F1-F2) e^{+i D32 t} a2

with D_nm the transition frequencies.  A symmetric drive leaves a2 frozen
and an antisymmetric one leaves a1 frozen; both selection rules are exact
here because the field differences are computed as literal zeros.

Propagation uses the classic fourth-order Runge-Kutta step with a fixed
substep chosen from the fastest frequency in the problem.  Unitarity is
not enforced, so the norm drift is an honest error meter.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .coupled import CoupledSystem
from .drive import DriveField, eval_field

__all__ = [
    "InitialState",
    "AmplitudeState",
    "Trajectory",
    "IntegrationError",
    "amplitude_derivative",
    "rk_step",
    "integrate",
]

_NORM_TOL = 1e-12


class IntegrationError(RuntimeError):
    """Propagation lost more norm than the hard bound allows."""


@dataclass(frozen=True)
class InitialState:
    """Unit-norm amplitude vector at t = 0 over the coupled eigenstates."""

    amplitudes: np.ndarray = field(compare=False)
    label: str = "custom"

    def __post_init__(self) -> None:
        a = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if a.shape != (4,):
            raise ValueError("need exactly four amplitudes")
        if abs(float(np.sum(np.abs(a) ** 2)) - 1.0) > _NORM_TOL:
            raise ValueError("initial state must have unit norm")
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)

    @classmethod
    def ground(cls) -> "InitialState":
        return cls(np.array([1.0, 0.0, 0.0, 0.0], dtype=complex), label="ground")

    @classmethod
    def wavepacket(cls) -> "InitialState":
        """Equal superposition of the two lowest eigenstates.

        At t = 0 this localizes both particles on the same side, the
        natural start for tunneling studies.
        """
        r = math.sqrt(0.5)
        return cls(np.array([r, r, 0.0, 0.0], dtype=complex), label="wavepacket")

    @classmethod
    def from_amplitudes(cls, values) -> "InitialState":
        return cls(np.asarray(values, dtype=complex))


@dataclass(frozen=True)
class AmplitudeState:
    """Amplitudes a_0..a_3 at one instant."""

    t: float
    a: np.ndarray = field(compare=False)

    def populations(self) -> np.ndarray:
        return np.abs(self.a) ** 2

    def norm(self) -> float:
        return float(np.sum(np.abs(self.a) ** 2))


@dataclass(frozen=True)
class Trajectory:
    """Amplitudes sampled on a uniform output grid."""

    times: np.ndarray = field(compare=False)
    amplitudes: np.ndarray = field(compare=False)  # shape (n, 4)
    norm_drift: float

    def __len__(self) -> int:
        return len(self.times)

    def state(self, i: int) -> AmplitudeState:
        return AmplitudeState(t=float(self.times[i]), a=self.amplitudes[i])

    def populations(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


def _rates(t, a0, a1, a2, a3, iasp, ibsp, ibsm, iasm, d10, d20, d31, d32):
    """Right-hand side; field factors are premultiplied by i/hbar."""
    e10 = cmath.exp(-1j * d10 * t)
    e20 = cmath.exp(-1j * d20 * t)
    e31 = cmath.exp(-1j * d31 * t)
    e32 = cmath.exp(-1j * d32 * t)
    da0 = iasp * e10 * a1 + ibsm * e20 * a2
    da1 = iasp * e10.conjugate() * a0 + ibsp * e31 * a3
    da2 = ibsm * e20.conjugate() * a0 - iasm * e32 * a3
    da3 = ibsp * e31.conjugate() * a1 - iasm * e32.conjugate() * a2
    return da0, da1, da2, da3


def _field_factors(sys: CoupledSystem, drive: DriveField, t: float):
    F1, F2 = eval_field(drive, t)
    i_h = 1j / sys.hbar
    sp = 0.5 * (F1 + F2)
    sm = 0.5 * (F1 - F2)
    return (
        i_h * sys.alpha * sp,
        i_h * sys.beta * sp,
        i_h * sys.beta * sm,
        i_h * sys.alpha * sm,
    )


def amplitude_derivative(
    state: AmplitudeState, sys: CoupledSystem, drive: DriveField
) -> np.ndarray:
    """da/dt at the state's own time."""
    gaps = _gap_tuple(sys)
    factors = _field_factors(sys, drive, state.t)
    a = state.a
    da = _rates(state.t, a[0], a[1], a[2], a[3], *factors, *gaps)
    return np.asarray(da, dtype=complex)


def _gap_tuple(sys: CoupledSystem):
    d = sys.delta_gap
    return (float(d[1, 0]), float(d[2, 0]), float(d[3, 1]), float(d[3, 2]))


def _rk4(t, a, h, sys, drive, gaps):
    """One classic Runge-Kutta step from t to t + h on a 4-tuple."""
    half = 0.5 * h

    def rhs(tt, y):
        return _rates(tt, y[0], y[1], y[2], y[3], *_field_factors(sys, drive, tt), *gaps)

    k1 = rhs(t, a)
    k2 = rhs(t + half, tuple(a[i] + half * k1[i] for i in range(4)))
    k3 = rhs(t + half, tuple(a[i] + half * k2[i] for i in range(4)))
    k4 = rhs(t + h, tuple(a[i] + h * k3[i] for i in range(4)))
    sixth = h / 6.0
    return tuple(
        a[i] + sixth * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) for i in range(4)
    )


def rk_step(
    state: AmplitudeState, sys: CoupledSystem, drive: DriveField, h: float
) -> AmplitudeState:
    """Advance one step of size h."""
    gaps = _gap_tuple(sys)
    a = tuple(complex(v) for v in state.a)
    new = _rk4(state.t, a, h, sys, drive, gaps)
    return AmplitudeState(t=state.t + h, a=np.asarray(new, dtype=complex))


def _target_step(sys: CoupledSystem, drive: DriveField, points_per_period: int) -> float:
    # Fastest scale present: the widest static gap, plus the drive frequency
    # and a Rabi-type bound on the field coupling.
    w = abs(float(sys.delta_gap[3, 0]))
    if drive.kind != "none":
        w += drive.omega
        w += (sys.alpha + sys.beta) * drive.f / sys.hbar
    if w <= 0.0:
        w = 1.0
    return (2.0 * math.pi / w) / points_per_period


def integrate(
    initial: InitialState,
    sys: CoupledSystem,
    drive: DriveField,
    t_max: float,
    dt_out: float = 0.5,
    *,
    points_per_period: int = 400,
    norm_bound: float = 1e-6,
) -> Trajectory:
    """Propagate from t = 0 and record the amplitudes every dt_out.

    The substep divides dt_out exactly, so every output time is an exact
    multiple of dt_out.  Raises IntegrationError when the accumulated
    norm drift exceeds norm_bound.
    """
    if t_max <= 0.0:
        raise ValueError("t_max must be positive")
    if dt_out <= 0.0:
        raise ValueError("dt_out must be positive")
    if points_per_period < 10:
        raise ValueError("points_per_period is too small to be meaningful")
    n_out = int(math.floor(t_max / dt_out + 1e-9))
    if n_out < 1:
        raise ValueError("t_max must cover at least one output interval")

    h_target = min(_target_step(sys, drive, points_per_period), dt_out)
    n_sub = max(1, int(math.ceil(dt_out / h_target - 1e-12)))
    h = dt_out / n_sub
    gaps = _gap_tuple(sys)

    amps = np.empty((n_out + 1, 4), dtype=complex)
    amps[0] = initial.amplitudes
    a = tuple(complex(v) for v in initial.amplitudes)
    drift = abs(1.0 - sum(abs(v) ** 2 for v in a))
    for k in range(n_out):
        t0 = k * dt_out
        for j in range(n_sub):
            a = _rk4(t0 + j * h, a, h, sys, drive, gaps)
        amps[k + 1] = a
        dev = abs(1.0 - sum(abs(v) ** 2 for v in a))
        if dev > drift:
            drift = dev
        if drift > norm_bound:
            raise IntegrationError(
                f"norm drift {drift:.3e} exceeded {norm_bound:g} at t = {(k + 1) * dt_out:g}"
            )
    times = np.arange(n_out + 1) * dt_out
    amps.setflags(write=False)
    times.setflags(write=False)
    return Trajectory(times=times, amplitudes=amps, norm_drift=drift)
