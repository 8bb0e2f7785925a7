"""
SU(N) Basis

Generalized Gell-Mann basis of traceless Hermitian matrices and its structure constants.
"""

from su_basis.generators import BasisSet, build_basis, expand, gell_mann_index, synthesize
from su_basis.structure import StructureConstants, structure_constants

__all__ = [
    "BasisSet",
    "StructureConstants",
    "build_basis",
    "expand",
    "gell_mann_index",
    "structure_constants",
    "synthesize",
]
