"""
Reporting Data Models

Pydantic payloads that make up the JSON reports.
"""

from typing import List, Optional

from pydantic import BaseModel, Field

from chamber.models import StratumInfo


class BoundaryReport(BaseModel):
    is_boundary: bool
    is_edge: bool


class StateReport(BaseModel):
    """Classification of one state: spectrum, stratum, invariants and entropy."""
    n: int
    input_kind: str
    spectrum: List[float]
    stratum: StratumInfo
    casimirs: List[float]
    entropy: float
    entropy_unit: str
    purity: float
    linear_entropy: float
    is_pure: bool
    boundary: BoundaryReport
    coherence_norm: float
    cayley_hamilton_residual: Optional[float] = None


class SpecialPointRow(BaseModel):
    name: str
    spectrum: List[float]
    simplex_coords: List[float]
    entropy: float
    casimirs: List[float]


class DistanceRow(BaseModel):
    pair: str
    distance: float


class StratumRow(BaseModel):
    partition: List[int]
    label: str
    kind: str
    little_group: List[str]
    homogeneous_space: str
    orbit_dim: int
    spectrum: List[float]


class GeometryTables(BaseModel):
    """Special points, pairwise coherence distances and the stratum census for one N."""
    n: int
    entropy_unit: str
    special_points: List[SpecialPointRow] = Field(default_factory=list)
    distances: List[DistanceRow] = Field(default_factory=list)
    strata: List[StratumRow] = Field(default_factory=list)
    strata_count: int
