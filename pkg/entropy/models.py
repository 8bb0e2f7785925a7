"""
Entropy Data Models
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

Point = Tuple[float, float, float]


@dataclass(frozen=True)
class EntropyValue:
    """Von Neumann entropy in nats."""
    value: float

    def in_bits(self) -> float:
        return self.value / math.log(2.0)

    def in_base(self, log_base: str) -> float:
        if log_base == "nats":
            return self.value
        if log_base == "bits":
            return self.in_bits()
        raise ValueError(f"log base must be 'nats' or 'bits', got {log_base!r}")

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class AngleCoords:
    """Angle parametrization: theta, phi in [0, pi]; phi is unused for N=2."""
    theta: float
    phi: float = 0.0

    def __post_init__(self):
        for name in ("theta", "phi"):
            value = getattr(self, name)
            if not 0.0 <= value <= math.pi:
                raise ValueError(f"{name} must lie in [0, pi], got {value}")


class ContourSet(BaseModel):
    """
    Isentropic lines over the N=3 chamber.

    Points are barycentric triples (x, y, z), x + y + z = 1, x >= y >= z >= 0.
    `degenerate_point` names O or P when the level set collapses to a vertex.
    `max_deviation` is max |eta - level| over the vertices; `within_tolerance`
    is False when it reaches the contour tolerance.
    """
    level: float
    polylines: List[List[Point]] = Field(default_factory=list)
    degenerate_point: Optional[str] = None
    max_deviation: float = 0.0
    within_tolerance: bool = True

    @property
    def point_count(self) -> int:
        return sum(len(line) for line in self.polylines)

    def points(self) -> List[Point]:
        return [point for line in self.polylines for point in line]

    @property
    def is_empty(self) -> bool:
        return not self.polylines
