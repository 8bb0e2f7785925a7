"""
Entropy

Von Neumann entropy, angle parametrizations, entropy surfaces and isentropic
contours over the eigenvalue chamber.
"""

from entropy.contours import (
    CHAMBER_VERTICES,
    chamber_grid,
    entropy_surface,
    isentropic_contours,
    max_level_deviation,
    op_line_crossing,
)
from entropy.functions import (
    angles_to_spectrum,
    entropy,
    entropy_from_angles,
    entropy_of_points,
    line_entropy_profile,
    linear_entropy,
)
from entropy.models import AngleCoords, ContourSet, EntropyValue

__all__ = [
    "AngleCoords",
    "CHAMBER_VERTICES",
    "ContourSet",
    "EntropyValue",
    "angles_to_spectrum",
    "chamber_grid",
    "entropy",
    "entropy_from_angles",
    "entropy_of_points",
    "entropy_surface",
    "isentropic_contours",
    "line_entropy_profile",
    "linear_entropy",
    "max_level_deviation",
    "op_line_crossing",
]
