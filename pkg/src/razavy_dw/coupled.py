"""Two dipole-coupled double wells restricted to the lowest doublets.

With each particle confined to the two tunneling states of its own well,
the interaction g x1 x2 closes on the four product states

    phi0 phi0,  phi0 phi1,  phi1 phi0,  phi1 phi1.

The Hamiltonian diagonalizes in closed form.  Eigenstates Phi_0..Phi_3
involve a single mixing angle theta between phi0 phi0 and phi1 phi1,
while Phi_1 and Phi_2 are the symmetric and antisymmetric combinations
of the singly excited products.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .potential import SingleWellBasis

__all__ = [
    "CoupledSystem",
    "build_coupled",
    "energy_matrix_product_basis",
    "energy_matrix_eigen_basis",
    "eigenvector_matrix",
]


@dataclass(frozen=True)
class CoupledSystem:
    """Closed-form spectrum of the coupled pair.

    g          coupling strength of g x1 x2
    energies   eigenvalues E0..E3, ascending
    theta      mixing angle in [-pi/4, pi/4]
    alpha      drive weight sqrt(2) gamma (cos theta + sin theta)
    beta       drive weight sqrt(2) gamma (cos theta - sin theta)
    delta_gap  matrix of transition frequencies (E_nu - E_mu) / hbar
    basis      the underlying single-well basis
    """

    g: float
    energies: tuple[float, float, float, float]
    theta: float
    alpha: float
    beta: float
    delta_gap: np.ndarray = field(repr=False, compare=False)
    basis: SingleWellBasis = field(repr=False)

    @property
    def delta10(self) -> float:
        """Frequency of the lowest transition, the main resonance."""
        return float(self.delta_gap[1, 0])

    @property
    def hbar(self) -> float:
        return self.basis.params.hbar


def build_coupled(basis: SingleWellBasis, g: float) -> CoupledSystem:
    """Diagonalize the coupled pair for coupling strength g >= 0."""
    if g < 0.0:
        raise ValueError("coupling strength g must be non-negative")
    hbar = basis.params.hbar
    delta = basis.delta
    gamma = basis.gamma
    eps_mean = 0.5 * (basis.eps[0] + basis.eps[1])
    # Center of the four-level block: both particles at the doublet mean.
    e_center = 2.0 * eps_mean
    gg2 = g * gamma * gamma
    rad = math.hypot(delta * 2.0, gg2 * 2.0) / 2.0  # sqrt(delta^2 + g^2 gamma^4)
    energies = (
        e_center - rad,
        e_center - gg2,
        e_center + gg2,
        e_center + rad,
    )
    theta = 0.5 * math.atan2(gg2, delta)
    c, s = math.cos(theta), math.sin(theta)
    alpha = math.sqrt(2.0) * gamma * (c + s)
    beta = math.sqrt(2.0) * gamma * (c - s)
    e_arr = np.asarray(energies)
    gap = (e_arr[:, None] - e_arr[None, :]) / hbar
    gap.setflags(write=False)
    return CoupledSystem(
        g=g,
        energies=energies,
        theta=theta,
        alpha=alpha,
        beta=beta,
        delta_gap=gap,
        basis=basis,
    )


def energy_matrix_product_basis(sys: CoupledSystem, F: float) -> np.ndarray:
    """4x4 energy matrix in the product basis under a symmetric field F.

    Ordering: phi0 phi0, phi0 phi1, phi1 phi0, phi1 phi1.  The field
    couples through -gamma F on every single-flip element; the static
    interaction contributes -g gamma^2 on the double-flip elements.
    """
    e0, e1 = sys.basis.eps[0], sys.basis.eps[1]
    gm = sys.basis.gamma
    gf = -gm * F
    gg2 = -sys.g * gm * gm
    return np.array(
        [
            [2.0 * e0, gf, gf, gg2],
            [gf, e0 + e1, gg2, gf],
            [gf, gg2, e0 + e1, gf],
            [gg2, gf, gf, 2.0 * e1],
        ]
    )


def energy_matrix_eigen_basis(sys: CoupledSystem, F1: float, F2: float) -> np.ndarray:
    """4x4 drive matrix in the eigenbasis for per-well fields F1, F2.

    The diagonal carries the static eigenvalues.  A symmetric field
    (F1 = F2) couples only 0-1 and 1-3 with weights alpha and beta; an
    antisymmetric one (F1 = -F2) couples only 0-2 and 2-3.
    """
    fp = 0.5 * (F1 + F2)
    fm = 0.5 * (F1 - F2)
    m = np.diag(np.asarray(sys.energies))
    m[0, 1] = m[1, 0] = -sys.alpha * fp
    m[0, 2] = m[2, 0] = -sys.beta * fm
    m[1, 3] = m[3, 1] = -sys.beta * fp
    m[2, 3] = m[3, 2] = sys.alpha * fm
    return m


def eigenvector_matrix(sys: CoupledSystem) -> np.ndarray:
    """Columns are the eigenstates Phi_nu expanded in the product basis."""
    c, s = math.cos(sys.theta), math.sin(sys.theta)
    r = 1.0 / math.sqrt(2.0)
    return np.array(
        [
            [c, 0.0, 0.0, -s],
            [0.0, r, -r, 0.0],
            [0.0, r, r, 0.0],
            [s, 0.0, 0.0, c],
        ]
    )
