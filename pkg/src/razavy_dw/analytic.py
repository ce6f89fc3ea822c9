"""Closed-form amplitude solutions for special drive shapes.

Two regimes admit analytic treatment:

* A symmetric sinusoidal drive near the lowest resonance.  Keeping only
  the slowly rotating term of the 0-1 coupling (rotating-wave
  approximation) gives two-frequency amplitudes controlled by the Rabi
  frequency Omega = sqrt((omega - D10)^2 + (alpha f / hbar)^2).
* A symmetric step drive.  The 0-1 block with a constant field is a
  static two-level problem with Omega_s = sqrt(D10^2 + (2 alpha f / hbar)^2).

Both keep a2 and a3 frozen at their initial values; the drive cannot
reach them in these approximations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coupled import CoupledSystem
from .dynamics import InitialState

__all__ = [
    "RwaSolution",
    "TlaStepSolution",
    "rabi_frequency",
    "rwa_solve",
    "rwa_amplitudes",
    "rwa_single_well_drive",
    "rwa_time_averages",
    "rwa_validity_warning",
    "tla_step_solution",
    "tla_step_amplitudes",
]


@dataclass(frozen=True)
class RwaSolution:
    """Coefficients of the two-frequency rotating-wave amplitudes.

    a0(t) = r0 e^{i(dw - Omega)t/2} + s0 e^{i(dw + Omega)t/2}
    a1(t) = r1 e^{-i(dw - Omega)t/2} + s1 e^{-i(dw + Omega)t/2}

    with dw = omega - delta10.  a2 and a3 stay at their initial values.
    """

    r0: complex
    s0: complex
    r1: complex
    s1: complex
    Omega: float
    omega: float
    delta10: float
    a2: complex = 0.0
    a3: complex = 0.0


@dataclass(frozen=True)
class TlaStepSolution:
    """Constant-field two-level parameters for a ground-state start."""

    Omega_s: float
    delta10: float
    alpha: float
    f: float


def rabi_frequency(sys: CoupledSystem, f: float, omega: float) -> float:
    """Generalized Rabi frequency of the driven 0-1 transition."""
    if f < 0.0:
        raise ValueError("field amplitude must be non-negative")
    return math.hypot(omega - sys.delta10, sys.alpha * f / sys.hbar)


def rwa_solve(
    initial: InitialState, sys: CoupledSystem, f: float, omega: float
) -> RwaSolution:
    """Rotating-wave solution for a symmetric drive f sin(omega t)."""
    if omega <= 0.0:
        raise ValueError("omega must be positive")
    a0, a1, a2, a3 = (complex(v) for v in initial.amplitudes)
    d10 = sys.delta10
    dw = omega - d10
    x = sys.alpha * f / sys.hbar
    Om = math.hypot(dw, x)
    if Om == 0.0:
        # exactly resonant with zero field: nothing moves
        return RwaSolution(
            r0=a0, s0=0.0, r1=a1, s1=0.0, Omega=0.0, omega=omega, delta10=d10,
            a2=a2, a3=a3,
        )
    A = (0.5j * x / Om) * a0 + ((dw + Om) / (2.0 * Om)) * a1
    B = -(0.5j * x / Om) * a0 - ((dw - Om) / (2.0 * Om)) * a1
    if x == 0.0:
        # zero field, finite detuning: a0 is constant, carried by the
        # branch whose exponent vanishes (Om = |dw|)
        if dw >= 0.0:
            r0, s0 = a0, 0.0 + 0.0j
        else:
            r0, s0 = 0.0 + 0.0j, a0
    else:
        r0 = B * (1j / x) * (dw + Om)
        s0 = A * (1j / x) * (dw - Om)
    return RwaSolution(
        r0=r0, s0=s0, r1=A, s1=B, Omega=Om, omega=omega, delta10=d10, a2=a2, a3=a3
    )


def rwa_amplitudes(sol: RwaSolution, t):
    """Amplitudes at time t (scalar gives shape (4,), array gives (n, 4))."""
    t_arr = np.asarray(t, dtype=float)
    dw = sol.omega - sol.delta10
    em = np.exp(0.5j * (dw - sol.Omega) * t_arr)
    ep = np.exp(0.5j * (dw + sol.Omega) * t_arr)
    a0 = sol.r0 * em + sol.s0 * ep
    a1 = sol.r1 * np.conj(em) + sol.s1 * np.conj(ep)
    a2 = np.broadcast_to(sol.a2, t_arr.shape) if t_arr.ndim else sol.a2
    a3 = np.broadcast_to(sol.a3, t_arr.shape) if t_arr.ndim else sol.a3
    out = np.stack(
        [np.asarray(a0, dtype=complex), np.asarray(a1, dtype=complex),
         np.asarray(a2, dtype=complex) + 0j, np.asarray(a3, dtype=complex) + 0j],
        axis=-1,
    )
    return out


def rwa_single_well_drive(
    initial: InitialState, sys: CoupledSystem, f: float, omega: float
) -> RwaSolution:
    """Rotating-wave solution when only the first well is driven.

    Splitting the one-sided field into symmetric and antisymmetric halves
    shows the antisymmetric half cannot connect levels 0 and 1, so near
    the lowest resonance the dynamics matches a symmetric drive at half
    the amplitude.
    """
    return rwa_solve(initial, sys, 0.5 * f, omega)


def rwa_time_averages(sol: RwaSolution, sys: CoupledSystem) -> tuple[float, float]:
    """Long-time means of the squared return probability and concurrence.

    Every oscillating term of the closed-form expressions averages to
    zero, leaving combinations of |r|^2 and |s|^2 only.  Assumes the
    solution started with a2 = a3 = 0.
    """
    r0, s0, r1, s1 = sol.r0, sol.s0, sol.r1, sol.s1
    p = (abs(r0) ** 2, abs(s0) ** 2, abs(r1) ** 2, abs(s1) ** 2)
    w0 = abs(r0 + s0) ** 2
    w1 = abs(r1 + s1) ** 2
    corr_sq = w0 * (p[0] + p[1]) + w1 * (p[2] + p[3])
    quart0 = p[0] ** 2 + p[1] ** 2 + 4.0 * p[0] * p[1]
    quart1 = p[2] ** 2 + p[3] ** 2 + 4.0 * p[2] * p[3]
    s2t = math.sin(2.0 * sys.theta)
    conc_sq = quart1 + s2t * s2t * quart0
    return (corr_sq, conc_sq)


def rwa_validity_warning(sys: CoupledSystem, f: float, omega: float) -> str | None:
    """Message when the rotating-wave assumptions look shaky, else None.

    The approximation needs both the drive coupling and the detuning to
    be small against the 1-0 gap; half the gap is the warning threshold.
    """
    d10 = sys.delta10
    rate = sys.alpha * f / sys.hbar
    if rate > 0.5 * d10:
        return (
            f"drive coupling {rate:.4g} is not small against "
            f"the 1-0 gap {d10:.4g}; rotating-wave results are unreliable"
        )
    if abs(omega - d10) > 0.5 * d10:
        return (
            f"detuning {omega - d10:.4g} is large against "
            f"the 1-0 gap {d10:.4g}; rotating-wave results are unreliable"
        )
    return None


def tla_step_solution(sys: CoupledSystem, f: float) -> TlaStepSolution:
    """Two-level parameters for a step drive from the ground state."""
    if f < 0.0:
        raise ValueError("field amplitude must be non-negative")
    Om = math.hypot(sys.delta10, 2.0 * sys.alpha * f / sys.hbar)
    return TlaStepSolution(Omega_s=Om, delta10=sys.delta10, alpha=sys.alpha, f=f)


def tla_step_amplitudes(sys: CoupledSystem, f: float, t):
    """Amplitudes under a constant symmetric field, ground-state start.

    Scalar t gives shape (4,), an array gives (n, 4).  The pair (a0, a1)
    has unit norm identically; a2 = a3 = 0.
    """
    sol = tla_step_solution(sys, f)
    d, Om = sol.delta10, sol.Omega_s
    t_arr = np.asarray(t, dtype=float)
    em = np.exp(-0.5j * (d - Om) * t_arr)
    ep = np.exp(-0.5j * (d + Om) * t_arr)
    a0 = ((d + Om) * em - (d - Om) * ep) / (2.0 * Om)
    a1 = -(sys.alpha * f / (sys.hbar * Om)) * (np.conj(em) - np.conj(ep))
    zero = np.zeros_like(t_arr, dtype=complex) if t_arr.ndim else 0.0 + 0.0j
    return np.stack(
        [np.asarray(a0, dtype=complex), np.asarray(a1, dtype=complex), zero + 0j, zero + 0j],
        axis=-1,
    )
