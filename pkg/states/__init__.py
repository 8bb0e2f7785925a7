"""
Quantum States

Density matrices, the coherence vector parametrization, unitary conjugation and sampling.
"""

from states.coherence import coherence_scale, decode, encode
from states.models import (
    CoherenceVector,
    DecodeResult,
    DensityMatrix,
    DimensionMismatchError,
    InvalidStateError,
    NonUnitaryError,
)
from states.operations import conjugate, hermitize, is_pure, is_unitary, purity
from states.sampling import haar_unitary, random_density_matrix, random_pure_state, random_spectrum

__all__ = [
    "CoherenceVector",
    "DecodeResult",
    "DensityMatrix",
    "DimensionMismatchError",
    "InvalidStateError",
    "NonUnitaryError",
    "coherence_scale",
    "conjugate",
    "decode",
    "encode",
    "haar_unitary",
    "hermitize",
    "is_pure",
    "is_unitary",
    "purity",
    "random_density_matrix",
    "random_pure_state",
    "random_spectrum",
]
