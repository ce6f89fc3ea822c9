"""Driven dynamics of two coupled double wells in Razavy's potential.

The library covers the full pipeline: closed-form single-well eigensystem,
coupled four-level spectrum, interaction-picture propagation under several
drive shapes, rotating-wave and constant-field closed forms, and the
derived observables (populations, positions, return amplitude, concurrence,
coordinate densities).  The `razavy-dw` command drives it from scenario
files.
"""

from .analytic import (
    RwaSolution,
    TlaStepSolution,
    rabi_frequency,
    rwa_amplitudes,
    rwa_single_well_drive,
    rwa_solve,
    rwa_time_averages,
    rwa_validity_warning,
    tla_step_amplitudes,
    tla_step_solution,
)
from .coupled import (
    CoupledSystem,
    build_coupled,
    eigenvector_matrix,
    energy_matrix_eigen_basis,
    energy_matrix_product_basis,
)
from .drive import DRIVE_KINDS, DriveField, eval_field
from .dynamics import (
    AmplitudeState,
    InitialState,
    IntegrationError,
    Trajectory,
    amplitude_derivative,
    integrate,
    rk_step,
)
from .observables import (
    DensityGrid,
    ObservableSeries,
    concurrence,
    concurrence_from_coefficients,
    correlation,
    density_grid,
    expectation_positions,
    grid_norm,
    grid_oracle_expectation,
    qubit_coefficients,
    rwa_concurrence,
    rwa_correlation,
    rwa_expectation,
    series_from_amplitudes,
    trapezoid_mean,
)
from .potential import (
    PotentialParams,
    QuadratureError,
    SingleWellBasis,
    eval_eigenfunction,
    eval_potential,
    normalization_and_gamma,
    schrodinger_residual,
    single_well_eigenvalues,
)
from .scenario import (
    Scenario,
    ScenarioError,
    ScenarioParseError,
    ScenarioValidationError,
    build_system,
    bundled_scenario_dir,
    load_scenario,
    resolve_drive,
)

__version__ = "0.1.0"

__all__ = [
    "AmplitudeState",
    "CoupledSystem",
    "DensityGrid",
    "DriveField",
    "DRIVE_KINDS",
    "InitialState",
    "IntegrationError",
    "ObservableSeries",
    "PotentialParams",
    "QuadratureError",
    "RwaSolution",
    "Scenario",
    "ScenarioError",
    "ScenarioParseError",
    "ScenarioValidationError",
    "SingleWellBasis",
    "TlaStepSolution",
    "Trajectory",
    "amplitude_derivative",
    "build_coupled",
    "build_system",
    "bundled_scenario_dir",
    "concurrence",
    "concurrence_from_coefficients",
    "correlation",
    "density_grid",
    "eigenvector_matrix",
    "energy_matrix_eigen_basis",
    "energy_matrix_product_basis",
    "eval_eigenfunction",
    "eval_field",
    "eval_potential",
    "expectation_positions",
    "grid_norm",
    "grid_oracle_expectation",
    "integrate",
    "load_scenario",
    "normalization_and_gamma",
    "qubit_coefficients",
    "rabi_frequency",
    "resolve_drive",
    "rk_step",
    "rwa_amplitudes",
    "rwa_concurrence",
    "rwa_correlation",
    "rwa_expectation",
    "rwa_single_well_drive",
    "rwa_solve",
    "rwa_time_averages",
    "rwa_validity_warning",
    "schrodinger_residual",
    "series_from_amplitudes",
    "single_well_eigenvalues",
    "tla_step_amplitudes",
    "tla_step_solution",
    "trapezoid_mean",
]
