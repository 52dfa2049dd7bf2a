"""Density-distribution fidelity and susceptibility for lattice ground states."""

from .bethe import (
    BetheRoots,
    DensityOfStates,
    HubbardParams,
    QuantumNumbers,
    continuation_sweep,
    density_of_state,
    energy,
    ground_state_quantum_numbers,
    hubbard_dff_from_roots,
    hubbard_dff_sweep,
    resample_to_grid,
    solve_bae,
)
from .config import RunConfig, parse_config
from .density import (
    DensityDistribution,
    FidelityCurve,
    FidelityRecord,
    SingularTermWarning,
    central_difference_density,
    fidelity,
    susceptibility_from_derivative,
    susceptibility_from_fidelity,
    susceptibility_from_pair,
)
from .ed import exact_ground_energy_small
from .errors import (
    ConfigSyntaxError,
    ConfigurationError,
    NonConvergenceError,
    NumericFailureError,
    PartialResultError,
    PrecisionLimitError,
    SupportMismatchError,
    ValidationError,
)
from .kernels import BACKEND
from .lmg import (
    BandedSymmetricMatrix,
    LmgGroundState,
    LmgParams,
    build_hamiltonian,
    density_distribution,
    ground_density,
    ground_state,
    ground_state_dense,
    lmg_dff_sweep,
    lmg_sweep_with_densities,
)
from .thermo import bessel_j0, thermodynamic_dos

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BandedSymmetricMatrix",
    "BetheRoots",
    "ConfigSyntaxError",
    "ConfigurationError",
    "DensityDistribution",
    "DensityOfStates",
    "FidelityCurve",
    "FidelityRecord",
    "HubbardParams",
    "LmgGroundState",
    "LmgParams",
    "NonConvergenceError",
    "NumericFailureError",
    "PartialResultError",
    "PrecisionLimitError",
    "QuantumNumbers",
    "RunConfig",
    "SingularTermWarning",
    "SupportMismatchError",
    "ValidationError",
    "bessel_j0",
    "build_hamiltonian",
    "central_difference_density",
    "continuation_sweep",
    "density_distribution",
    "density_of_state",
    "energy",
    "exact_ground_energy_small",
    "fidelity",
    "ground_density",
    "ground_state",
    "ground_state_dense",
    "ground_state_quantum_numbers",
    "hubbard_dff_from_roots",
    "hubbard_dff_sweep",
    "lmg_dff_sweep",
    "lmg_sweep_with_densities",
    "parse_config",
    "resample_to_grid",
    "solve_bae",
    "susceptibility_from_derivative",
    "susceptibility_from_fidelity",
    "susceptibility_from_pair",
    "thermodynamic_dos",
]
