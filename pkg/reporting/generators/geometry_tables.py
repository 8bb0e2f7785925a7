"""
Geometry Tables Generator

For a given N: the chamber's special points with their entropies and Casimir
invariants, the coherence distances between every pair of them, and one
representative per stratum.
"""

from itertools import combinations
from typing import Any, Dict, Optional

from chamber.simplex import coherence_distance, special_points, to_simplex_coords
from chamber.strata import count_strata, stratum_census
from core.logging_config import get_logger
from entropy.functions import entropy
from invariants.casimirs import casimirs_from_spectrum
from reporting.generators.base import BaseReportGenerator
from reporting.models import DistanceRow, GeometryTables, SpecialPointRow, StratumRow
from su_basis.generators import build_basis

logger = get_logger(__name__)

MIN_LEVELS = 2
MAX_LEVELS = 8


class GeometryTablesGenerator(BaseReportGenerator):
    """Special points, edge lengths and stratum census of the N-level chamber."""

    def get_title(self, parameters: Optional[Dict[str, Any]] = None) -> str:
        return f"Chamber geometry tables (N={self._require(parameters, 'n_levels')})"

    def generate(self, parameters: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """
        Generate the tables.

        Args:
            parameters: {"n_levels": 2..8}

        Returns:
            GeometryTables as a dict
        """
        n_levels = int(self._require(parameters, "n_levels"))
        if not MIN_LEVELS <= n_levels <= MAX_LEVELS:
            raise ValueError(f"n_levels must lie in [{MIN_LEVELS}, {MAX_LEVELS}], got {n_levels}")

        basis = build_basis(n_levels)
        points = special_points(n_levels)

        point_rows = [
            SpecialPointRow(
                name=name,
                spectrum=spectrum.tolist(),
                simplex_coords=to_simplex_coords(spectrum).coords.tolist(),
                entropy=self._entropy(entropy(spectrum)),
                casimirs=casimirs_from_spectrum(spectrum).values,
            )
            for name, spectrum in points
        ]

        distance_rows = [
            DistanceRow(pair=f"{first_name}-{second_name}", distance=coherence_distance(first, second, basis))
            for (first_name, first), (second_name, second) in combinations(points, 2)
        ]

        strata_rows = [
            StratumRow(
                partition=info.partition,
                label=info.label,
                kind=info.kind.value,
                little_group=info.little_group,
                homogeneous_space=info.homogeneous_space,
                orbit_dim=info.orbit_dim,
                spectrum=spectrum.tolist(),
            )
            for spectrum, info in stratum_census(n_levels)
        ]

        tables = GeometryTables(
            n=n_levels,
            entropy_unit=self.entropy_unit,
            special_points=point_rows,
            distances=distance_rows,
            strata=strata_rows,
            strata_count=count_strata(n_levels),
        )
        logger.debug(
            "geometry_tables_generated",
            n_levels=n_levels,
            special_points=len(point_rows),
            strata=len(strata_rows),
        )
        return tables.model_dump(mode="json")
