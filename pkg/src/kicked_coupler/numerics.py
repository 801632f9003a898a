"""Hermitian eigendecomposition and unitary exponentials.

Unitaries are built by spectral decomposition, U = V exp(-i lambda t) V+,
rather than by a series method: the generators here are Hermitian and the
physics tests lean on the result being unitary to eigensolver accuracy.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractViolationError, DimensionMismatchError

HERMITICITY_RTOL = 1e-10


@dataclass(frozen=True)
class EigenDecomposition:
    """Spectral data of a Hermitian matrix.

    eigenvalues  : real, ascending.
    eigenvectors : unitary matrix whose columns are the eigenvectors.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermiticity_defect(h: np.ndarray) -> float:
    """max |H - H+|, the absolute deviation from Hermiticity."""
    return float(np.max(np.abs(h - h.conj().T))) if h.size else 0.0


def hermitian_eigendecomposition(h: np.ndarray) -> EigenDecomposition:
    """Full spectral decomposition of a Hermitian matrix.

    Raises ContractViolationError if the input fails the Hermiticity
    tolerance, and propagates LinAlgError if the eigensolver does not
    converge.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {h.shape}")
    scale = float(np.max(np.abs(h))) if h.size else 0.0
    if scale > 0 and hermiticity_defect(h) > HERMITICITY_RTOL * scale:
        raise ContractViolationError(
            f"matrix is not Hermitian within {HERMITICITY_RTOL:g} relative tolerance "
            f"(defect {hermiticity_defect(h):.3e}, scale {scale:.3e})"
        )
    eigenvalues, eigenvectors = np.linalg.eigh(h)
    return EigenDecomposition(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def unitary_from_generator(h: np.ndarray, t: float) -> np.ndarray:
    """exp(-i H t) for Hermitian H, via the spectral decomposition."""
    dec = hermitian_eigendecomposition(h)
    phases = np.exp(-1j * dec.eigenvalues * t)
    return (dec.eigenvectors * phases) @ dec.eigenvectors.conj().T


def apply_operator(u: np.ndarray, psi: np.ndarray) -> np.ndarray:
    """Matrix-vector product with an explicit dimension check."""
    u = np.asarray(u)
    psi = np.asarray(psi)
    if u.ndim != 2 or psi.ndim != 1 or u.shape[1] != psi.shape[0]:
        raise DimensionMismatchError(
            f"cannot apply operator of shape {u.shape} to vector of shape {psi.shape}"
        )
    return u @ psi
