"""
Chamber Data Models

Spectra on the eigenvalue simplex, diagonal simplex coordinates and stratum
descriptions.
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, computed_field

from core.config import resolve_tolerance


class OutOfSimplexError(ValueError):
    """Values do not form a point of the probability simplex."""

    def __init__(self, message: str, values: Optional[List[float]] = None):
        super().__init__(message)
        self.values = values


@dataclass(frozen=True, eq=False)
class Spectrum:
    """
    N eigenvalues on the probability simplex, in the order given.

    The chamber representative is the descending order (see chamber_representative).
    """
    n_levels: int
    values: np.ndarray

    @classmethod
    def from_values(cls, values, tolerance: Optional[float] = None) -> "Spectrum":
        """
        Validate a list of probabilities.

        Raises:
            OutOfSimplexError: If a value is outside [-tol, 1 + tol] or the sum is not 1
        """
        tol = resolve_tolerance("positivity", tolerance)
        array = np.array(values, dtype=float).reshape(-1)
        if array.size < 1:
            raise OutOfSimplexError("spectrum must have at least one value")
        if not np.all(np.isfinite(array)):
            raise OutOfSimplexError("spectrum values must be finite", array.tolist())
        if np.any(array < -tol) or np.any(array > 1.0 + tol):
            raise OutOfSimplexError(
                f"spectrum values must lie in [0, 1], got {array.tolist()}", array.tolist()
            )
        total = float(np.sum(array))
        if abs(total - 1.0) > tol:
            raise OutOfSimplexError(f"spectrum must sum to 1, got {total:.12g}", array.tolist())
        array.setflags(write=False)
        return cls(n_levels=array.size, values=array)

    @classmethod
    def uniform(cls, n_levels: int) -> "Spectrum":
        return cls.from_values(np.full(n_levels, 1.0 / n_levels))

    def padded(self, n_levels: int) -> "Spectrum":
        """Embed into a larger system by appending zero eigenvalues."""
        if n_levels < self.n_levels:
            raise ValueError(f"cannot pad N={self.n_levels} down to {n_levels}")
        return Spectrum.from_values(np.concatenate([self.values, np.zeros(n_levels - self.n_levels)]))

    def tolist(self) -> List[float]:
        return [float(v) for v in self.values]

    def __len__(self) -> int:
        return self.n_levels

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True, eq=False)
class SimplexCoords:
    """
    Diagonal coordinates (a, b, c, ..., z): the components of the coherence
    vector on the N - 1 diagonal generators.
    """
    n_levels: int
    coords: np.ndarray

    @classmethod
    def from_coords(cls, n_levels: int, coords) -> "SimplexCoords":
        array = np.array(coords, dtype=float).reshape(-1)
        if array.size != n_levels - 1:
            raise ValueError(f"N={n_levels} needs {n_levels - 1} coordinates, got {array.size}")
        array.setflags(write=False)
        return cls(n_levels=n_levels, coords=array)

    @property
    def last(self) -> float:
        """The z coordinate, bounded by -1 <= z <= 1/(N-1) inside the simplex."""
        return float(self.coords[-1])


class StratumKind(str, Enum):
    """Orbit types under unitary conjugation."""
    FIXED_POINT = "fixed-point"
    PURE = "pure"
    CRITICAL = "critical"
    DEGENERATE = "degenerate"
    GENERIC = "generic"


class StratumInfo(BaseModel):
    """Degeneracy partition, little group and orbit dimension of a spectrum."""
    n_levels: int
    partition: List[int]
    little_group: List[str]
    orbit_dim: int
    kind: StratumKind

    @computed_field
    @property
    def partition_label(self) -> str:
        return "[" + ",".join(str(k) for k in self.partition) + "]"

    @computed_field
    @property
    def label(self) -> str:
        return f"{self.kind.value} {self.partition_label}"

    @computed_field
    @property
    def homogeneous_space(self) -> str:
        """G/H, e.g. U(4)/U(2)^2 or U(4)/[U(3)xU(1)]."""
        counts = Counter(self.partition)
        factors = []
        for size in sorted(counts, reverse=True):
            power = counts[size]
            factors.append(f"U({size})" + (f"^{power}" if power > 1 else ""))
        denominator = factors[0] if len(factors) == 1 else "[" + "x".join(factors) + "]"
        return f"U({self.n_levels})/{denominator}"
