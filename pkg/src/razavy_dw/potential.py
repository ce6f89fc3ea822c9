"""Closed-form eigensystem of Razavy's hyperbolic double well.

The potential

    V(x) = (hbar^2 / 2m) [ (xi^2/8) cosh 4x - 4 xi cosh 2x - xi^2/8 ]

is quasi-exactly solvable: its four lowest levels and eigenfunctions are
known in closed form.  This module evaluates them, fixes the normalization
constants by quadrature, and computes the position matrix element

    gamma = <phi_0 | x | phi_1>

that controls everything downstream (two-level splitting, drive coupling,
entanglement measures).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PotentialParams",
    "SingleWellBasis",
    "QuadratureError",
    "eval_potential",
    "single_well_eigenvalues",
    "eval_eigenfunction",
    "normalization_and_gamma",
    "schrodinger_residual",
]


class QuadratureError(RuntimeError):
    """Panel refinement stopped before reaching the requested tolerance."""


@dataclass(frozen=True)
class PotentialParams:
    """Physical constants of the double well (atomic-style units)."""

    hbar: float = 1.0
    mass: float = 1.0
    xi: float = 1.0

    def __post_init__(self) -> None:
        if self.hbar <= 0.0 or self.mass <= 0.0:
            raise ValueError("hbar and mass must be positive")
        # The four closed-form levels sit below the barrier and keep their
        # ordering only on this range.
        if not 0.0 < self.xi <= 4.0:
            raise ValueError("xi must lie in (0, 4]")

    @property
    def energy_scale(self) -> float:
        return self.hbar**2 / (2.0 * self.mass)


@dataclass(frozen=True)
class SingleWellBasis:
    """Normalized four-level basis of one double well.

    eps          closed-form eigenvalues (eps0..eps3), ascending
    norm_consts  positive normalization constants A0..A3
    gamma        <phi_0|x|phi_1>, positive by sign convention
    params       parameters the basis was built for
    """

    eps: tuple[float, float, float, float]
    norm_consts: tuple[float, float, float, float]
    gamma: float
    params: PotentialParams

    @property
    def delta(self) -> float:
        """Tunneling splitting of the lowest doublet, eps1 - eps0."""
        return self.eps[1] - self.eps[0]


def eval_potential(x, params: PotentialParams = PotentialParams()):
    """Potential energy V(x); vectorized over x."""
    x = np.asarray(x, dtype=float)
    xi = params.xi
    v = (xi**2 / 8.0) * np.cosh(4.0 * x) - 4.0 * xi * np.cosh(2.0 * x) - xi**2 / 8.0
    return params.energy_scale * v


def single_well_eigenvalues(
    params: PotentialParams = PotentialParams(),
) -> tuple[float, float, float, float]:
    """The four closed-form levels, in ascending order."""
    xi = params.xi
    s = params.energy_scale
    rm = 2.0 * math.sqrt(4.0 - 2.0 * xi + xi * xi)
    rp = 2.0 * math.sqrt(4.0 + 2.0 * xi + xi * xi)
    eps0 = s * (-xi - 5.0 - rm)
    eps1 = s * (xi - 5.0 - rp)
    eps2 = s * (-xi - 5.0 + rm)
    eps3 = s * (xi - 5.0 + rp)
    return (eps0, eps1, eps2, eps3)


def _bracket(n: int, x: np.ndarray, xi: float) -> np.ndarray:
    """Polynomial-in-cosh part of level n, without envelope or norm."""
    rm = 2.0 * math.sqrt(4.0 - 2.0 * xi + xi * xi)
    rp = 2.0 * math.sqrt(4.0 + 2.0 * xi + xi * xi)
    if n == 0:
        return 3.0 * xi * np.cosh(x) + (4.0 - xi + rm) * np.cosh(3.0 * x)
    if n == 1:
        return 3.0 * xi * np.sinh(x) + (4.0 + xi + rp) * np.sinh(3.0 * x)
    if n == 2:
        return 3.0 * xi * np.cosh(x) + (4.0 - xi - rm) * np.cosh(3.0 * x)
    if n == 3:
        return 3.0 * xi * np.sinh(x) + (4.0 + xi - rp) * np.sinh(3.0 * x)
    raise ValueError("level index must be 0, 1, 2 or 3")


def _raw_eigenfunction(n: int, x, params: PotentialParams) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    xi = params.xi
    envelope = np.exp(-xi * np.cosh(2.0 * x) / 4.0)
    return envelope * _bracket(n, x, xi)


def eval_eigenfunction(n: int, x, basis: SingleWellBasis):
    """Normalized eigenfunction phi_n(x); vectorized over x."""
    if not 0 <= n <= 3:
        raise ValueError("level index must be 0, 1, 2 or 3")
    return basis.norm_consts[n] * _raw_eigenfunction(n, x, basis.params)


def _gauss_panels(func, lo: float, hi: float, n_panels: int, nodes, weights) -> float:
    edges = np.linspace(lo, hi, n_panels + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1] - edges[0])
    x = mids[:, None] + half * nodes[None, :]
    return float(half * np.sum(weights[None, :] * func(x)))


def _adaptive_integral(func, lo: float, hi: float, tol: float) -> float:
    """Composite Gauss-Legendre with panel doubling until stable."""
    nodes, weights = np.polynomial.legendre.leggauss(16)
    prev = _gauss_panels(func, lo, hi, 4, nodes, weights)
    n_panels = 8
    while n_panels <= 1024:
        cur = _gauss_panels(func, lo, hi, n_panels, nodes, weights)
        if abs(cur - prev) <= tol:
            return cur
        prev = cur
        n_panels *= 2
    raise QuadratureError(
        f"integral did not stabilize to {tol:g} (last delta {abs(cur - prev):.3g})"
    )


def normalization_and_gamma(
    params: PotentialParams = PotentialParams(),
    *,
    window: float = 5.0,
    tol: float = 1e-12,
) -> SingleWellBasis:
    """Build the normalized basis and the dipole element gamma.

    The eigenfunctions decay like exp(-xi cosh(2x)/4), so the integrals
    over [-window, window] are converged to machine precision already at
    window = 5.  The window is configurable for the stability checks.
    """
    if window <= 0.0:
        raise ValueError("window must be positive")
    eps = single_well_eigenvalues(params)
    norms = []
    for n in range(4):
        sq = _adaptive_integral(
            lambda x, n=n: _raw_eigenfunction(n, x, params) ** 2,
            -window,
            window,
            tol,
        )
        norms.append(1.0 / math.sqrt(sq))
    overlap = _adaptive_integral(
        lambda x: x
        * _raw_eigenfunction(0, x, params)
        * _raw_eigenfunction(1, x, params),
        -window,
        window,
        tol,
    )
    gamma = norms[0] * norms[1] * overlap
    if gamma < 0.0:
        # sign convention: flip phi_1 so that <phi_0|x|phi_1> > 0
        norms[1] = -norms[1]
        gamma = -gamma
    return SingleWellBasis(
        eps=eps,
        norm_consts=(norms[0], norms[1], norms[2], norms[3]),
        gamma=gamma,
        params=params,
    )


def schrodinger_residual(n: int, basis: SingleWellBasis, xs, h: float = 1e-4) -> float:
    """Max of |H phi_n - eps_n phi_n| on the sample points xs.

    The second derivative uses a five-point stencil of width h, so the
    result is limited by O(h^4) truncation plus round-off near h ~ 1e-4.
    """
    if h <= 0.0:
        raise ValueError("stencil step must be positive")
    xs = np.asarray(xs, dtype=float)
    if np.any(xs + h == xs):
        raise ValueError("stencil step underflows at the sample points")
    p = basis.params

    def phi(x):
        return eval_eigenfunction(n, x, basis)

    second = (
        -phi(xs + 2 * h)
        + 16.0 * phi(xs + h)
        - 30.0 * phi(xs)
        + 16.0 * phi(xs - h)
        - phi(xs - 2 * h)
    ) / (12.0 * h * h)
    residual = (
        -p.energy_scale * second
        + (eval_potential(xs, p) - basis.eps[n]) * phi(xs)
    )
    return float(np.max(np.abs(residual)))
