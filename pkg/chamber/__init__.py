"""
Eigenvalue Chamber

Spectra on the probability simplex, the Weyl chamber quotient, special points
and the stratification of states by degeneracy.
"""

from chamber.models import OutOfSimplexError, SimplexCoords, Spectrum, StratumInfo, StratumKind
from chamber.simplex import (
    chamber_representative,
    coherence_distance,
    diagonal_state,
    from_simplex_coords,
    special_points,
    spectrum_of,
    to_simplex_coords,
)
from chamber.strata import (
    classify,
    count_strata,
    degeneracy_blocks,
    enumerate_partitions,
    representative_spectrum,
    stratum_census,
)

__all__ = [
    "OutOfSimplexError",
    "SimplexCoords",
    "Spectrum",
    "StratumInfo",
    "StratumKind",
    "chamber_representative",
    "classify",
    "coherence_distance",
    "count_strata",
    "degeneracy_blocks",
    "diagonal_state",
    "enumerate_partitions",
    "from_simplex_coords",
    "representative_spectrum",
    "special_points",
    "spectrum_of",
    "stratum_census",
    "to_simplex_coords",
]
