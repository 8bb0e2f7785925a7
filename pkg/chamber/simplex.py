"""
Eigenvalue Simplex and Weyl Chamber

Spectra of density matrices fill a regular simplex with N vertices (the pure
diagonal states). Permutations of the eigenvalues cut it into N! chambers; the
descending-ordered chamber holds exactly one point per conjugation orbit.
"""

from typing import List, Optional, Tuple

import numpy as np

from chamber.models import OutOfSimplexError, SimplexCoords, Spectrum
from core.config import resolve_tolerance
from core.logging_config import get_logger
from states.coherence import coherence_scale, encode
from states.models import DensityMatrix, DimensionMismatchError
from su_basis.generators import BasisSet, build_basis

logger = get_logger(__name__)


def spectrum_of(rho: DensityMatrix, tolerance: Optional[float] = None) -> Spectrum:
    """
    Descending eigenvalues of a state.

    Eigenvalues in [-tol, 0) are clipped to 0 and the result renormalized to
    unit sum, so downstream entropy and Casimir formulas see nonnegative input.
    """
    tol = resolve_tolerance("positivity", tolerance)
    values = np.linalg.eigvalsh(rho.entries)
    values = np.where((values < 0.0) & (values >= -tol), 0.0, values)
    values = values / np.sum(values)
    return Spectrum.from_values(values[::-1], tolerance=tol)


def _diagonal_generators(n_levels: int) -> np.ndarray:
    basis = build_basis(n_levels)
    return basis.matrices[basis.diagonal_indices].diagonal(axis1=1, axis2=2).real


def to_simplex_coords(spectrum: Spectrum) -> SimplexCoords:
    """
    Diagonal coordinates (a, b, ..., z) of a spectrum, in the order given.

    They are the coherence-vector components of diag(spectrum) on the diagonal
    generators, so for N=3 (a, b) sit in the lambda_3 and lambda_8 slots.
    """
    n = spectrum.n_levels
    if n < 2:
        raise ValueError("simplex coordinates need N >= 2")
    coords = _diagonal_generators(n) @ spectrum.values / np.sqrt(2.0 * (n - 1) / n)
    return SimplexCoords.from_coords(n, coords)


def from_simplex_coords(coords: SimplexCoords, tolerance: Optional[float] = None) -> Spectrum:
    """
    Spectrum of the diagonal state with the given coordinates.

    Raises:
        OutOfSimplexError: If a decoded value lies outside [-tol, 1 + tol]
    """
    tol = resolve_tolerance("positivity", tolerance)
    n = coords.n_levels
    values = (1.0 + coherence_scale(n) * (coords.coords @ _diagonal_generators(n))) / n

    if np.any(values < -tol) or np.any(values > 1.0 + tol):
        logger.debug("simplex_coords_out_of_range", n_levels=n, values=values.tolist())
        raise OutOfSimplexError(
            f"coordinates {coords.coords.tolist()} decode outside the simplex: {values.tolist()}",
            values.tolist(),
        )
    return Spectrum.from_values(values, tolerance=tol)


def chamber_representative(spectrum: Spectrum) -> Spectrum:
    """Descending sort: the same point for all N! permutations of a spectrum."""
    return Spectrum(n_levels=spectrum.n_levels, values=_readonly(np.sort(spectrum.values)[::-1]))


def _readonly(array: np.ndarray) -> np.ndarray:
    array = np.ascontiguousarray(array)
    array.setflags(write=False)
    return array


def q_point_name(k: int, n_levels: int) -> str:
    """Q_A for edge centers, Q_F for face centers, Q_cell for the (N-1)-cell center."""
    if k == 2:
        return "Q_A"
    if k == 3:
        return "Q_F"
    if k == n_levels - 1:
        return "Q_cell"
    return f"Q_{k}"


def special_points(n_levels: int) -> List[Tuple[str, Spectrum]]:
    """
    Vertices of the chamber: O, then Q_k for k = N-1 down to 2, then P.

    Q_k = (1/k, ..., 1/k, 0, ..., 0) with k equal entries.
    """
    if n_levels < 2:
        raise ValueError(f"n_levels must be >= 2, got {n_levels}")

    points = [("O", Spectrum.uniform(n_levels))]
    for k in range(n_levels - 1, 1, -1):
        values = np.zeros(n_levels)
        values[:k] = 1.0 / k
        points.append((q_point_name(k, n_levels), Spectrum.from_values(values)))

    pure = np.zeros(n_levels)
    pure[0] = 1.0
    points.append(("P", Spectrum.from_values(pure)))
    return points


def diagonal_state(spectrum: Spectrum) -> DensityMatrix:
    """diag(spectrum) in the given order."""
    return DensityMatrix.diagonal(spectrum.values)


def coherence_distance(first: Spectrum, second: Spectrum, basis: Optional[BasisSet] = None) -> float:
    """
    Euclidean distance between the coherence vectors of diag(first) and diag(second).

    No chamber reduction is applied: distances are between the given points.

    Raises:
        DimensionMismatchError: If the spectra or basis disagree on N
    """
    if first.n_levels != second.n_levels:
        raise DimensionMismatchError(
            f"spectra have N={first.n_levels} and N={second.n_levels}"
        )
    basis = basis if basis is not None else build_basis(first.n_levels)
    if basis.n_levels != first.n_levels:
        raise DimensionMismatchError(
            f"basis has N={basis.n_levels}, spectra have N={first.n_levels}"
        )
    delta = encode(diagonal_state(first), basis).components - encode(diagonal_state(second), basis).components
    return float(np.linalg.norm(delta))
