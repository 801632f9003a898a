"""Qubit-subspace projection, concurrence, and Bell-state fidelities."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .analytic import TruncatedState
from .errors import ContractViolationError, DegenerateProjectionError
from .fock import ModeDims, joint_index
from .numerics import hermitian_eigendecomposition, hermiticity_defect
from .propagation import Trajectory

# sigma_y (x) sigma_y in basis order (|00>, |01>, |10>, |11>); real
_SY_SY = np.array(
    [
        [0, 0, 0, -1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
    ],
    dtype=complex,
)

_PROJECTION_FLOOR = 1e-15


@dataclass(frozen=True)
class BellState:
    """One of the four maximally entangled two-qubit states."""

    label: str
    amplitudes: TruncatedState


def bell_states() -> tuple[BellState, BellState, BellState, BellState]:
    """The four Bell states with +/- i relative phases.

    B1 = (|00> + i|11>)/sqrt2,  B2 = (|00> - i|11>)/sqrt2,
    B3 = (|01> + i|10>)/sqrt2,  B4 = (|01> - i|10>)/sqrt2.
    """
    s = 1.0 / np.sqrt(2.0)
    return (
        BellState("B1", TruncatedState(s, 0j, 0j, 1j * s)),
        BellState("B2", TruncatedState(s, 0j, 0j, -1j * s)),
        BellState("B3", TruncatedState(0j, s, 1j * s, 0j)),
        BellState("B4", TruncatedState(0j, s, -1j * s, 0j)),
    )


def project_to_qubits(psi: np.ndarray, dims: ModeDims) -> tuple[TruncatedState, float]:
    """Project a joint-basis state onto the two-qubit subspace.

    Returns the renormalized four amplitudes and the leakage, the
    probability mass outside the qubit subspace before renormalization.
    """
    psi = np.asarray(psi, dtype=complex)
    raw = np.array([psi[joint_index(m, n, dims)] for m in (0, 1) for n in (0, 1)])
    weight = float(np.sum(np.abs(raw) ** 2))
    if np.all(np.abs(raw) < _PROJECTION_FLOOR):
        raise DegenerateProjectionError(
            "state has no numerical support on the qubit subspace"
        )
    leakage = float(np.vdot(psi, psi).real) - weight
    return TruncatedState.from_array(raw / np.sqrt(weight)), max(leakage, 0.0)


def density_from_pure(state: TruncatedState) -> np.ndarray:
    """Rank-one density matrix |psi><psi| on the qubit subspace."""
    amps = state.as_array()
    return np.outer(amps, amps.conj())


def _validate_density(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ContractViolationError(f"two-qubit density must be 4x4, got {rho.shape}")
    if hermiticity_defect(rho) > 1e-12:
        raise ContractViolationError("density matrix is not Hermitian within 1e-12")
    if abs(np.trace(rho).real - 1.0) > 1e-12 or abs(np.trace(rho).imag) > 1e-12:
        raise ContractViolationError("density matrix trace differs from 1 beyond 1e-12")
    eigenvalues = hermitian_eigendecomposition(rho).eigenvalues
    if np.min(eigenvalues) < -1e-10:
        raise ContractViolationError(
            f"density matrix has negative eigenvalue {np.min(eigenvalues):.3e}"
        )
    return rho


def concurrence(rho: np.ndarray) -> float:
    """Two-qubit concurrence C = max(0, l1 - l2 - l3 - l4).

    The l_i are the decreasing square roots of the eigenvalues of
    rho (sy x sy) rho* (sy x sy).  They are obtained from the Hermitian
    positive-semidefinite matrix sqrt(rho) rho~ sqrt(rho), which shares its
    spectrum with rho rho~ but needs only the Hermitian eigensolver.
    """
    rho = _validate_density(rho)
    rho_tilde = _SY_SY @ rho.conj() @ _SY_SY
    dec = hermitian_eigendecomposition(rho)
    sqrt_rho = (dec.eigenvectors * np.sqrt(np.clip(dec.eigenvalues, 0.0, None))) @ (
        dec.eigenvectors.conj().T
    )
    m = sqrt_rho @ rho_tilde @ sqrt_rho
    m = 0.5 * (m + m.conj().T)  # symmetrize roundoff
    eigenvalues = np.clip(hermitian_eigendecomposition(m).eigenvalues, 0.0, None)
    # roundoff noise below the leading eigenvalue would be amplified by the
    # square root; anything that far down is numerically zero
    if eigenvalues.max() > 0:
        eigenvalues[eigenvalues < 1e-13 * eigenvalues.max()] = 0.0
    lam = np.sqrt(np.sort(eigenvalues)[::-1])
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def concurrence_pure(state: TruncatedState) -> float:
    """Closed form for pure states: 2 |c00 c11 - c01 c10|."""
    return float(2.0 * abs(state.c00 * state.c11 - state.c01 * state.c10))


def bell_fidelities(state: TruncatedState) -> tuple[float, float, float, float]:
    """Squared overlaps |<Bi|psi>|^2 with the four Bell states."""
    amps = state.as_array()
    return tuple(
        float(np.abs(np.vdot(b.amplitudes.as_array(), amps)) ** 2)
        for b in bell_states()
    )


def annotate_trajectory(traj: Trajectory) -> Trajectory:
    """Fill every record with probabilities, leakage, concurrence, and
    Bell fidelities of the projected (renormalized) qubit state."""
    dims = traj.params.dims
    for rec in traj.records:
        qubit_state, leakage = project_to_qubits(rec.state, dims)
        raw_probs = np.array(
            [
                np.abs(rec.state[joint_index(m, n, dims)]) ** 2
                for m in (0, 1)
                for n in (0, 1)
            ]
        )
        rec.probs = tuple(float(p) for p in raw_probs)
        rec.leakage = leakage
        rec.concurrence = concurrence_pure(qubit_state)
        rec.bell_fidelities = bell_fidelities(qubit_state)
    return traj
