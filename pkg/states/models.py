"""
State Data Models

Density matrices, coherence vectors and the diagnostics raised when a matrix
falls outside the state body.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from core.config import resolve_tolerance


class InvalidStateError(ValueError):
    """A matrix fails the Hermiticity, unit-trace or positivity conditions."""

    def __init__(
        self,
        message: str,
        min_eigenvalue: Optional[float] = None,
        trace: Optional[complex] = None,
        hermiticity_error: Optional[float] = None,
    ):
        super().__init__(message)
        self.min_eigenvalue = min_eigenvalue
        self.trace = trace
        self.hermiticity_error = hermiticity_error


class DimensionMismatchError(ValueError):
    """Operands describe systems with different numbers of levels."""


class NonUnitaryError(ValueError):
    """A conjugating matrix is not unitary to tolerance."""


def hermiticity_error(matrix: np.ndarray) -> float:
    return float(np.max(np.abs(matrix - matrix.conj().T))) if matrix.size else 0.0


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """
    N x N Hermitian, unit-trace, positive-semidefinite operator.

    Use DensityMatrix.from_array to build one; it validates and Hermitizes the
    entries. The stored array is read-only.
    """
    n_levels: int
    entries: np.ndarray

    @classmethod
    def from_array(cls, array, tolerance: Optional[float] = None) -> "DensityMatrix":
        """
        Validate and wrap a matrix.

        Inputs within tolerance of Hermitian are replaced by (rho + rho^dagger)/2.

        Raises:
            InvalidStateError: If any state condition fails beyond tolerance
        """
        tol = resolve_tolerance("positivity", tolerance)
        matrix = np.array(array, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] < 1:
            raise InvalidStateError(f"density matrix must be square, got shape {matrix.shape}")
        if not np.all(np.isfinite(matrix)):
            raise InvalidStateError("density matrix entries must be finite")

        herm_err = hermiticity_error(matrix)
        if herm_err > tol:
            raise InvalidStateError(
                f"matrix is not Hermitian (max |rho - rho^dagger| = {herm_err:.3e})",
                hermiticity_error=herm_err,
            )
        matrix = (matrix + matrix.conj().T) / 2.0

        trace = complex(np.trace(matrix))
        if abs(trace - 1.0) > tol:
            raise InvalidStateError(f"trace must be 1, got {trace.real:.12g}", trace=trace)

        min_eig = float(np.linalg.eigvalsh(matrix)[0])
        if min_eig < -tol:
            raise InvalidStateError(
                f"matrix is not positive semidefinite (min eigenvalue {min_eig:.6e})",
                min_eigenvalue=min_eig,
            )

        matrix.setflags(write=False)
        return cls(n_levels=matrix.shape[0], entries=matrix)

    @classmethod
    def maximally_mixed(cls, n_levels: int) -> "DensityMatrix":
        return cls.from_array(np.eye(n_levels) / n_levels)

    @classmethod
    def diagonal(cls, values, tolerance: Optional[float] = None) -> "DensityMatrix":
        return cls.from_array(np.diag(np.asarray(values, dtype=float)), tolerance=tolerance)

    def eigenvalues(self) -> np.ndarray:
        """Raw ascending eigenvalues (no clipping)."""
        return np.linalg.eigvalsh(self.entries)


@dataclass(frozen=True, eq=False)
class CoherenceVector:
    """Real vector of the N^2 - 1 expansion coefficients of a state."""
    n_levels: int
    components: np.ndarray

    def __post_init__(self):
        expected = self.n_levels ** 2 - 1
        if self.components.shape != (expected,):
            raise DimensionMismatchError(
                f"coherence vector for N={self.n_levels} needs {expected} components, "
                f"got shape {self.components.shape}"
            )

    @classmethod
    def from_components(cls, n_levels: int, components) -> "CoherenceVector":
        values = np.array(components, dtype=float)
        values.setflags(write=False)
        return cls(n_levels=int(n_levels), components=values)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.components))


@dataclass(frozen=True, eq=False)
class DecodeResult:
    """
    Outcome of decoding a coherence vector.

    `matrix` is always the reconstructed operator; `state` is set only when it
    lies inside the state body.
    """
    matrix: np.ndarray
    min_eigenvalue: float
    state: Optional[DensityMatrix]
    diagnostic: Optional[str] = None

    @property
    def is_valid(self) -> bool:
        return self.state is not None
