"""
Casimir Invariants

Elementary symmetric functions of the spectrum, Newton's identities and the
characteristic equation of a density matrix.
"""

from invariants.casimirs import (
    BoundaryStatus,
    CasimirSet,
    boundary_vanishing,
    casimirs_from_spectrum,
    casimirs_from_traces,
    characteristic_residual,
    elementary_symmetric,
    power_traces,
)

__all__ = [
    "BoundaryStatus",
    "CasimirSet",
    "boundary_vanishing",
    "casimirs_from_spectrum",
    "casimirs_from_traces",
    "characteristic_residual",
    "elementary_symmetric",
    "power_traces",
]
