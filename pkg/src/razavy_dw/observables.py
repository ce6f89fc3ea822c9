"""Physical observables built from the interaction-picture amplitudes.

Everything here reduces to the four amplitudes a_nu(t), the transition
frequencies, the mixing angle theta and the dipole element gamma:

* per-particle position expectations and their sum,
* the squared overlap with the initial state (return probability),
* the pair concurrence from the two-qubit reduction,
* the joint coordinate density on a grid, plus a quadrature cross-check.

Rotating-wave counterparts evaluate the same quantities directly from the
two-frequency closed form, which is cheaper and exposes the spectral
content (lines at omega and omega +/- Omega).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .analytic import RwaSolution
from .coupled import CoupledSystem
from .dynamics import AmplitudeState, InitialState
from .potential import SingleWellBasis, eval_eigenfunction

__all__ = [
    "ObservableSeries",
    "DensityGrid",
    "expectation_positions",
    "rwa_expectation",
    "correlation",
    "qubit_coefficients",
    "concurrence_from_coefficients",
    "concurrence",
    "rwa_correlation",
    "rwa_concurrence",
    "density_grid",
    "grid_norm",
    "grid_oracle_expectation",
    "series_from_amplitudes",
    "trapezoid_mean",
]


@dataclass(frozen=True)
class ObservableSeries:
    """Time series of the standard observables on one output grid."""

    times: np.ndarray = field(compare=False)
    populations: np.ndarray = field(compare=False)  # shape (n, 4)
    x1: np.ndarray = field(compare=False)
    x2: np.ndarray = field(compare=False)
    x_sum: np.ndarray = field(compare=False)
    corr: np.ndarray = field(compare=False)
    conc: np.ndarray = field(compare=False)


@dataclass(frozen=True)
class DensityGrid:
    """Joint coordinate density |Psi(x1, x2)|^2 at one time.

    values[i, j] corresponds to (x1_axis[i], x2_axis[j]).
    """

    x1_axis: np.ndarray = field(compare=False)
    x2_axis: np.ndarray = field(compare=False)
    values: np.ndarray = field(compare=False)
    t: float = 0.0


def _cross_terms(state: AmplitudeState, sys: CoupledSystem):
    """Real parts of the four oscillating bilinears entering <x_n>."""
    a0, a1, a2, a3 = (complex(v) for v in state.a)
    d = sys.delta_gap
    t = state.t
    t01 = (a0.conjugate() * a1 * cmath.exp(-1j * d[1, 0] * t)).real
    t23 = (a2.conjugate() * a3 * cmath.exp(-1j * d[3, 2] * t)).real
    t02 = (a0.conjugate() * a2 * cmath.exp(-1j * d[2, 0] * t)).real
    t13 = (a1.conjugate() * a3 * cmath.exp(-1j * d[3, 1] * t)).real
    return t01, t23, t02, t13


def expectation_positions(
    state: AmplitudeState, sys: CoupledSystem
) -> tuple[float, float, float]:
    """Position expectations (<x1>, <x2>, <x1 + x2>).

    The a1*a3 cross term enters both particles with the same sign: the
    1-3 coupling is exchange symmetric, and an exchange-symmetric state
    must give <x1> = <x2>.  Only the a0*a2 and a2*a3 terms, which live
    in the exchange-odd sector, change sign between the particles.
    """
    t01, t23, t02, t13 = _cross_terms(state, sys)
    c, s = math.cos(sys.theta), math.sin(sys.theta)
    pref = math.sqrt(2.0) * sys.basis.gamma
    x1 = pref * ((c + s) * (t01 - t23) + (c - s) * (t02 + t13))
    x2 = pref * ((c + s) * (t01 + t23) + (c - s) * (t13 - t02))
    return (x1, x2, x1 + x2)


def correlation(
    state: AmplitudeState, initial: InitialState, sys: CoupledSystem
) -> float:
    """|<psi(0)|psi(t)>|, the return amplitude magnitude."""
    d = sys.delta_gap
    t = state.t
    acc = 0.0 + 0.0j
    for nu in range(4):
        phase = cmath.exp(-1j * float(d[nu, 0]) * t) if nu else 1.0
        acc += complex(initial.amplitudes[nu]).conjugate() * complex(state.a[nu]) * phase
    return min(abs(acc), 1.0)


def qubit_coefficients(
    state: AmplitudeState, sys: CoupledSystem
) -> tuple[complex, complex, complex, complex]:
    """Product-basis coefficients (c00, c01, c10, c11) of the full state.

    Includes the static phases exp(-i E_nu t / hbar), so the result is
    the Schroedinger-picture wave function in the product basis.
    """
    a = [complex(v) for v in state.a]
    hbar = sys.hbar
    ph = [cmath.exp(-1j * e * state.t / hbar) for e in sys.energies]
    c, s = math.cos(sys.theta), math.sin(sys.theta)
    r = 1.0 / math.sqrt(2.0)
    b0, b1, b2, b3 = (a[nu] * ph[nu] for nu in range(4))
    c00 = c * b0 - s * b3
    c01 = r * (b1 - b2)
    c10 = r * (b1 + b2)
    c11 = s * b0 + c * b3
    return (c00, c01, c10, c11)


def concurrence_from_coefficients(
    c00: complex, c01: complex, c10: complex, c11: complex
) -> float:
    """Concurrence of a pure two-qubit state, C = 2 |c00 c11 - c01 c10|."""
    return min(2.0 * abs(c00 * c11 - c01 * c10), 1.0)


def concurrence(
    state: AmplitudeState, sys: CoupledSystem, t: float | None = None
) -> float:
    """Pair concurrence of the state; t defaults to the state's own time.

    Evaluated from the eigenbasis amplitudes directly; equal to the
    two-qubit route through qubit_coefficients up to round-off.
    """
    a0, a1, a2, a3 = (complex(v) for v in state.a)
    d = sys.delta_gap
    if t is None:
        t = state.t
    e30 = cmath.exp(-1j * d[3, 0] * t)
    e10 = cmath.exp(-1j * d[1, 0] * t)
    e20 = cmath.exp(-1j * d[2, 0] * t)
    s2t = math.sin(2.0 * sys.theta)
    c2t = math.cos(2.0 * sys.theta)
    inner = (
        (a0 * a0 - a3 * a3 * e30 * e30) * s2t
        + 2.0 * a0 * a3 * c2t * e30
        - a1 * a1 * e10 * e10
        + a2 * a2 * e20 * e20
    )
    return min(abs(inner), 1.0)


# -- rotating-wave observables ------------------------------------------


def rwa_expectation(sol: RwaSolution, sys: CoupledSystem, t):
    """Summed position expectation <x1 + x2> in the rotating-wave form.

    Three spectral lines: the drive frequency omega and the Rabi
    sidebands omega -/+ Omega.  Assumes a2 = a3 = 0.
    """
    t_arr = np.asarray(t, dtype=float)
    w, Om = sol.omega, sol.Omega
    r0, s0, r1, s1 = sol.r0, sol.s0, sol.r1, sol.s1
    mix = (
        (r0.conjugate() * s1 + s0.conjugate() * r1) * np.exp(-1j * w * t_arr)
        + r0.conjugate() * r1 * np.exp(-1j * (w - Om) * t_arr)
        + s0.conjugate() * s1 * np.exp(-1j * (w + Om) * t_arr)
    )
    per_particle = math.sqrt(2.0) * sys.basis.gamma * (
        math.cos(sys.theta) + math.sin(sys.theta)
    ) * np.real(mix)
    out = 2.0 * per_particle
    return float(out) if t_arr.ndim == 0 else out


def rwa_correlation(sol: RwaSolution, sys: CoupledSystem, t):
    """Return amplitude magnitude in the rotating-wave form.

    Spectral content: a line at Omega from each level separately and
    lines at omega and omega -/+ Omega from the interference term.
    Assumes a2 = a3 = 0.
    """
    t_arr = np.asarray(t, dtype=float)
    w, Om = sol.omega, sol.Omega
    r0, s0, r1, s1 = sol.r0, sol.s0, sol.r1, sol.s1
    eOm = np.exp(-1j * Om * t_arr)
    ew = np.exp(-1j * w * t_arr)
    w0 = abs(r0 + s0) ** 2
    w1 = abs(r1 + s1) ** 2
    g2 = w0 * (abs(r0) ** 2 + abs(s0) ** 2 + 2.0 * np.real(s0.conjugate() * r0 * eOm))
    g2 = g2 + w1 * (
        abs(r1) ** 2 + abs(s1) ** 2 + 2.0 * np.real(r1.conjugate() * s1 * eOm)
    )
    cross = (
        (s0.conjugate() * r1 + r0.conjugate() * s1) * ew
        + r0.conjugate() * r1 * ew * np.conj(eOm)
        + s0.conjugate() * s1 * ew * eOm
    )
    g2 = g2 + 2.0 * np.real((r0 + s0) * (r1.conjugate() + s1.conjugate()) * cross)
    out = np.sqrt(np.clip(g2, 0.0, 1.0))
    return float(out) if t_arr.ndim == 0 else out


def rwa_concurrence(sol: RwaSolution, sys: CoupledSystem, t):
    """Concurrence in the rotating-wave form; assumes a2 = a3 = 0."""
    t_arr = np.asarray(t, dtype=float)
    w, Om = sol.omega, sol.Omega
    r0, s0, r1, s1 = sol.r0, sol.s0, sol.r1, sol.s1
    p0r, p0s = abs(r0) ** 2, abs(s0) ** 2
    p1r, p1s = abs(r1) ** 2, abs(s1) ** 2
    eOm = np.exp(-1j * Om * t_arr)
    e2w = np.exp(-2j * w * t_arr)
    d0 = (
        p1r**2 + p1s**2 + 4.0 * p1r * p1s
        + 2.0 * np.real(
            2.0 * (p1r + p1s) * r1.conjugate() * s1 * eOm
            + (r1.conjugate() * s1) ** 2 * eOm * eOm
        )
    )
    rc0, sc0 = r0.conjugate(), s0.conjugate()
    d1 = 2.0 * np.real(
        (rc0**2 * s1**2 + sc0**2 * r1**2 + 4.0 * rc0 * sc0 * r1 * s1) * e2w
        + 2.0 * (rc0 * sc0 * r1**2 + rc0**2 * r1 * s1) * e2w * np.conj(eOm)
        + 2.0 * (rc0 * sc0 * s1**2 + sc0**2 * r1 * s1) * e2w * eOm
        + rc0**2 * r1**2 * e2w * np.conj(eOm) ** 2
        + sc0**2 * s1**2 * e2w * eOm**2
    )
    d2 = (
        p0r**2 + p0s**2 + 4.0 * p0r * p0s
        + 2.0 * np.real(
            2.0 * (p0r + p0s) * sc0 * r0 * eOm + (sc0 * r0) ** 2 * eOm * eOm
        )
    )
    s2t = math.sin(2.0 * sys.theta)
    c2 = d0 - d1 * s2t + d2 * s2t * s2t
    out = np.sqrt(np.clip(c2, 0.0, 1.0))
    return float(out) if t_arr.ndim == 0 else out


# -- coordinate-space density --------------------------------------------


def density_grid(
    state: AmplitudeState,
    sys: CoupledSystem,
    basis: "SingleWellBasis | None" = None,
    *,
    n_points: int = 201,
    extent: float = 3.0,
    norm_tol: float = 1e-6,
) -> DensityGrid:
    """Joint density |Psi(x1, x2)|^2 on a square grid.

    basis defaults to the one the system was built from.  The Riemann
    sum of the density must equal one within norm_tol, which guards
    against a grid that is too coarse or too small for the state.
    """
    if n_points < 2:
        raise ValueError("need at least two grid points per axis")
    if extent <= 0.0:
        raise ValueError("extent must be positive")
    if basis is None:
        basis = sys.basis
    axis = np.linspace(-extent, extent, n_points)
    p0 = eval_eigenfunction(0, axis, basis)
    p1 = eval_eigenfunction(1, axis, basis)
    c00, c01, c10, c11 = qubit_coefficients(state, sys)
    psi = (
        c00 * np.outer(p0, p0)
        + c01 * np.outer(p0, p1)
        + c10 * np.outer(p1, p0)
        + c11 * np.outer(p1, p1)
    )
    values = np.abs(psi) ** 2
    dx = axis[1] - axis[0]
    total = float(values.sum() * dx * dx)
    if abs(total - 1.0) > norm_tol:
        raise ValueError(
            f"grid too coarse or too small: density sums to {total:.8f}, not 1"
        )
    values.setflags(write=False)
    return DensityGrid(x1_axis=axis, x2_axis=axis.copy(), values=values, t=state.t)


def grid_norm(grid: DensityGrid) -> float:
    """Riemann-sum normalization of the stored density."""
    dx1 = grid.x1_axis[1] - grid.x1_axis[0]
    dx2 = grid.x2_axis[1] - grid.x2_axis[0]
    return float(grid.values.sum() * dx1 * dx2)


def grid_oracle_expectation(grid: DensityGrid, which: str) -> float:
    """<x1> or <x2> by 2D trapezoidal quadrature of the stored density.

    Independent of the amplitude-level formulas, so it serves as a
    cross-check of expectation_positions.
    """
    if which == "x1":
        weighted = grid.values * grid.x1_axis[:, None]
    elif which == "x2":
        weighted = grid.values * grid.x2_axis[None, :]
    else:
        raise ValueError("which must be 'x1' or 'x2'")
    inner = np.trapezoid(weighted, grid.x2_axis, axis=1)
    return float(np.trapezoid(inner, grid.x1_axis))


# -- series assembly and averaging ----------------------------------------


def series_from_amplitudes(
    times, amplitudes, initial: InitialState, sys: CoupledSystem
) -> ObservableSeries:
    """Evaluate every observable on an amplitude array of shape (n, 4)."""
    times = np.asarray(times, dtype=float)
    amps = np.asarray(amplitudes, dtype=complex)
    n = len(times)
    if amps.shape != (n, 4):
        raise ValueError("amplitude array must have shape (len(times), 4)")
    x1 = np.empty(n)
    x2 = np.empty(n)
    corr = np.empty(n)
    conc = np.empty(n)
    for i in range(n):
        st = AmplitudeState(t=float(times[i]), a=amps[i])
        x1[i], x2[i], _ = expectation_positions(st, sys)
        corr[i] = correlation(st, initial, sys)
        conc[i] = concurrence(st, sys)
    return ObservableSeries(
        times=times,
        populations=np.abs(amps) ** 2,
        x1=x1,
        x2=x2,
        x_sum=x1 + x2,
        corr=corr,
        conc=conc,
    )


def trapezoid_mean(times, values, period: float | None = None) -> float:
    """Trapezoidal time average, dropping the trailing partial period.

    With period given, only the largest whole number of periods from the
    start of the window enters the average; the remainder would bias the
    mean of an oscillating signal.
    """
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    if times.ndim != 1 or times.size < 2 or values.shape != times.shape:
        raise ValueError("need matching 1D time and value arrays")
    span = times[-1] - times[0]
    if period is not None and period > 0.0:
        whole = math.floor(span / period + 1e-9) * period
        if whole > 0.0:
            cut = times[0] + whole
            mask = times <= cut + 1e-12 * max(1.0, abs(cut))
            times = times[mask]
            values = values[mask]
            span = times[-1] - times[0]
    if span <= 0.0:
        raise ValueError("averaging window has zero length")
    return float(np.trapezoid(values, times) / span)
