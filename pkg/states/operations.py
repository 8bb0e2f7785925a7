"""
State Operations

Purity tests and unitary conjugation rho -> U rho U^dagger.
"""

from typing import Optional

import numpy as np

from core.config import resolve_tolerance
from states.models import DensityMatrix, DimensionMismatchError, NonUnitaryError


def hermitize(matrix: np.ndarray) -> np.ndarray:
    """(M + M^dagger) / 2."""
    matrix = np.asarray(matrix, dtype=np.complex128)
    return (matrix + matrix.conj().T) / 2.0


def is_pure(rho: DensityMatrix, tolerance: Optional[float] = None) -> bool:
    """True iff rho is idempotent: max |rho^2 - rho| < tolerance."""
    tol = resolve_tolerance("positivity", tolerance)
    residual = rho.entries @ rho.entries - rho.entries
    return bool(np.max(np.abs(residual)) < tol)


def purity(rho: DensityMatrix) -> float:
    """Tr[rho^2] = (1 + (N-1)|n|^2) / N."""
    return float(np.real(np.einsum("ab,ba->", rho.entries, rho.entries)))


def is_unitary(matrix: np.ndarray, tolerance: Optional[float] = None) -> bool:
    tol = resolve_tolerance("unitarity", tolerance)
    matrix = np.asarray(matrix, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    deviation = matrix.conj().T @ matrix - np.eye(matrix.shape[0])
    return bool(np.max(np.abs(deviation)) < tol)


def conjugate(
    rho: DensityMatrix,
    unitary: np.ndarray,
    tolerance: Optional[float] = None,
) -> DensityMatrix:
    """
    Conjugate a state by a unitary: U rho U^dagger.

    A global phase on U cancels, so U and e^{i a} U give the same state.

    Raises:
        DimensionMismatchError: If U is not N x N
        NonUnitaryError: If U is not unitary to tolerance
    """
    u = np.asarray(unitary, dtype=np.complex128)
    if u.shape != (rho.n_levels, rho.n_levels):
        raise DimensionMismatchError(
            f"unitary has shape {u.shape}, state has N={rho.n_levels}"
        )
    if not is_unitary(u, tolerance):
        raise NonUnitaryError("conjugating matrix is not unitary")

    return DensityMatrix.from_array(hermitize(u @ rho.entries @ u.conj().T))
