"""
Coherence Vector Parametrization

    rho = (1/N) (I + sqrt(N(N-1)/2) n . lambda)

The normalization puts pure states on the unit sphere |n| = 1 and the
maximally mixed state at n = 0.
"""

from typing import Optional

import numpy as np

from core.config import resolve_tolerance
from core.logging_config import get_logger
from states.models import CoherenceVector, DecodeResult, DensityMatrix, DimensionMismatchError
from su_basis.generators import BasisSet, synthesize

logger = get_logger(__name__)


def coherence_scale(n_levels: int) -> float:
    """sqrt(N(N-1)/2), the prefactor of n . lambda."""
    return float(np.sqrt(n_levels * (n_levels - 1) / 2.0))


def encode(rho: DensityMatrix, basis: BasisSet) -> CoherenceVector:
    """
    Coherence vector of a density matrix: n_i = Tr[rho l_i] / sqrt(2(N-1)/N).

    Raises:
        DimensionMismatchError: If the basis is for a different N
    """
    if basis.n_levels != rho.n_levels:
        raise DimensionMismatchError(
            f"state has N={rho.n_levels} but basis has N={basis.n_levels}"
        )
    n = rho.n_levels
    traces = np.einsum("ab,iba->i", rho.entries, basis.matrices).real
    components = traces / np.sqrt(2.0 * (n - 1) / n)
    return CoherenceVector.from_components(n, components)


def decode(
    vector: CoherenceVector,
    basis: BasisSet,
    tolerance: Optional[float] = None,
) -> DecodeResult:
    """
    Density matrix of a coherence vector.

    Vectors outside the state body decode to a non-positive matrix; that is
    reported through DecodeResult.diagnostic rather than corrected.
    """
    if basis.n_levels != vector.n_levels:
        raise DimensionMismatchError(
            f"vector has N={vector.n_levels} but basis has N={basis.n_levels}"
        )
    tol = resolve_tolerance("positivity", tolerance)
    n = vector.n_levels

    matrix = (np.eye(n, dtype=np.complex128) + coherence_scale(n) * synthesize(vector.components, basis)) / n
    matrix = (matrix + matrix.conj().T) / 2.0
    min_eig = float(np.linalg.eigvalsh(matrix)[0])

    if min_eig < -tol:
        diagnostic = (
            f"vector lies outside the state body: min eigenvalue {min_eig:.6e} < -{tol:g} "
            f"(|n| = {vector.norm:.6g})"
        )
        logger.warning("decode_outside_state_body", n_levels=n, min_eigenvalue=min_eig, norm=vector.norm)
        return DecodeResult(matrix=matrix, min_eigenvalue=min_eig, state=None, diagnostic=diagnostic)

    state = DensityMatrix.from_array(matrix, tolerance=tol)
    return DecodeResult(matrix=state.entries, min_eigenvalue=min_eig, state=state)
