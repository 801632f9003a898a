"""Kicked nonlinear coupler: two Kerr modes driven by periodic ultra-short
pulses, evolving as an effective qubit-qubit system that repeatedly visits
maximally entangled Bell states."""

from .analytic import (
    KickFrequencies,
    MapSampling,
    TruncatedState,
    calibrate_sampling,
    kick_frequencies,
    truncated_amplitudes,
    truncated_map_states,
    uncoupled_amplitudes,
)
from .entanglement import (
    BellState,
    annotate_trajectory,
    bell_fidelities,
    bell_states,
    concurrence,
    concurrence_pure,
    density_from_pure,
    project_to_qubits,
)
from .errors import (
    ConfigError,
    ContractViolationError,
    DegenerateProjectionError,
    DimensionMismatchError,
    SingularCouplingError,
)
from .fock import (
    ModeDims,
    annihilation_op,
    basis_state,
    creation_op,
    embed_mode_a,
    embed_mode_b,
    joint_index,
    number_op,
    split_index,
    tensor_product,
)
from .hamiltonians import (
    SystemParams,
    build_coupler_hamiltonian,
    build_kick_generator,
    total_number_op,
)
from .numerics import (
    EigenDecomposition,
    apply_operator,
    hermitian_eigendecomposition,
    hermiticity_defect,
    unitary_from_generator,
)
from .propagation import (
    DEFAULT_ORDERING,
    Ordering,
    StepOperators,
    Trajectory,
    TrajectoryRecord,
    build_half_kick,
    build_step_operators,
    evolve,
    evolve_midpulse,
    map_step,
    vacuum_state,
)

__all__ = [
    "BellState",
    "ConfigError",
    "ContractViolationError",
    "DEFAULT_ORDERING",
    "DegenerateProjectionError",
    "DimensionMismatchError",
    "EigenDecomposition",
    "KickFrequencies",
    "MapSampling",
    "ModeDims",
    "Ordering",
    "SingularCouplingError",
    "StepOperators",
    "SystemParams",
    "Trajectory",
    "TrajectoryRecord",
    "TruncatedState",
    "annihilation_op",
    "annotate_trajectory",
    "apply_operator",
    "basis_state",
    "bell_fidelities",
    "bell_states",
    "build_coupler_hamiltonian",
    "build_half_kick",
    "build_kick_generator",
    "build_step_operators",
    "calibrate_sampling",
    "concurrence",
    "concurrence_pure",
    "creation_op",
    "density_from_pure",
    "embed_mode_a",
    "embed_mode_b",
    "evolve",
    "evolve_midpulse",
    "hermitian_eigendecomposition",
    "hermiticity_defect",
    "joint_index",
    "kick_frequencies",
    "map_step",
    "number_op",
    "project_to_qubits",
    "split_index",
    "tensor_product",
    "total_number_op",
    "truncated_amplitudes",
    "truncated_map_states",
    "unitary_from_generator",
    "uncoupled_amplitudes",
    "vacuum_state",
]

__version__ = "0.1.0"
