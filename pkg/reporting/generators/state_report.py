"""
State Report Generator

Classifies one state: chamber spectrum, stratum, Casimir invariants, entropy
and purity. Accepts either a density matrix or a bare spectrum.
"""

from typing import Any, Dict, Optional

from chamber.models import Spectrum
from chamber.simplex import chamber_representative, diagonal_state, spectrum_of
from chamber.strata import classify
from core.logging_config import get_logger
from entropy.functions import entropy
from invariants.casimirs import (
    boundary_vanishing,
    casimirs_from_spectrum,
    casimirs_from_traces,
    characteristic_residual,
)
from reporting.generators.base import BaseReportGenerator
from reporting.models import BoundaryReport, StateReport
from states.coherence import encode
from states.models import DensityMatrix
from states.operations import is_pure, purity
from su_basis.generators import build_basis

logger = get_logger(__name__)


class StateReportGenerator(BaseReportGenerator):
    """Report for a single density matrix or spectrum."""

    def get_title(self, parameters: Optional[Dict[str, Any]] = None) -> str:
        state = self._require(parameters, "state")
        return f"State classification (N={state.n_levels})"

    def generate(self, parameters: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """
        Generate the state report.

        Args:
            parameters: {"state": DensityMatrix or Spectrum}

        Returns:
            StateReport as a dict
        """
        state = self._require(parameters, "state")
        tolerances = self.config.tolerances

        if isinstance(state, DensityMatrix):
            rho = state
            spectrum = spectrum_of(rho, tolerance=tolerances.positivity)
            casimirs = casimirs_from_traces(rho)
            residual = characteristic_residual(rho, casimirs)
            input_kind = "matrix"
        elif isinstance(state, Spectrum):
            spectrum = chamber_representative(state)
            rho = diagonal_state(spectrum)
            casimirs = casimirs_from_spectrum(spectrum)
            residual = None
            input_kind = "spectrum"
        else:
            raise ValueError(f"cannot report on {type(state).__name__}")

        stratum = classify(
            spectrum,
            degeneracy_tol=tolerances.degeneracy,
            positivity_tol=tolerances.positivity,
        )
        boundary = boundary_vanishing(spectrum, tolerance=tolerances.positivity)
        rho_purity = purity(rho)

        report = StateReport(
            n=spectrum.n_levels,
            input_kind=input_kind,
            spectrum=spectrum.tolist(),
            stratum=stratum,
            casimirs=casimirs.values,
            entropy=self._entropy(entropy(spectrum, tolerance=tolerances.positivity)),
            entropy_unit=self.entropy_unit,
            purity=rho_purity,
            linear_entropy=1.0 - rho_purity,
            is_pure=is_pure(rho, tolerance=tolerances.positivity),
            boundary=BoundaryReport(is_boundary=boundary.is_boundary, is_edge=boundary.is_edge),
            coherence_norm=encode(rho, build_basis(spectrum.n_levels)).norm if spectrum.n_levels >= 2 else 0.0,
            cayley_hamilton_residual=residual,
        )
        logger.debug("state_report_generated", n_levels=spectrum.n_levels, stratum=stratum.label)
        return report.model_dump(mode="json")
