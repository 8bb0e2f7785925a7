"""
Casimir Invariants

The Casimir invariants I_1..I_N of a state are the coefficients of its
characteristic equation

    rho^N - I_1 rho^(N-1) + I_2 rho^(N-2) - ... + (-1)^N I_N = 0,

i.e. the elementary symmetric functions of the eigenvalues. I_1 = Tr rho = 1
and I_N = det rho. They are computed two ways: from the spectrum, and from
traces of powers through Newton's identities.
"""

from typing import List, NamedTuple, Optional

import numpy as np
from pydantic import BaseModel, Field

from chamber.models import Spectrum
from core.config import resolve_tolerance
from core.logging_config import get_logger
from states.models import DensityMatrix, DimensionMismatchError

logger = get_logger(__name__)


class CasimirSet(BaseModel):
    """I_1..I_N of an N-level state (values[0] is I_1)."""
    n_levels: int
    values: List[float] = Field(default_factory=list)

    def invariant(self, k: int) -> float:
        """I_k, 1-based; I_0 is 1 by convention."""
        if k == 0:
            return 1.0
        if not 1 <= k <= self.n_levels:
            raise IndexError(f"I_{k} undefined for N={self.n_levels}")
        return self.values[k - 1]

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=float)


class BoundaryStatus(NamedTuple):
    is_boundary: bool
    is_edge: bool


def elementary_symmetric(values) -> np.ndarray:
    """
    e_0..e_n of the inputs by expanding prod (t + mu_i) one factor at a time.

    Every step adds products of nonnegative numbers, so there is no cancellation
    for spectra.
    """
    values = np.asarray(values, dtype=float)
    coefficients = np.zeros(values.size + 1)
    coefficients[0] = 1.0
    for count, mu in enumerate(values, start=1):
        coefficients[1:count + 1] = coefficients[1:count + 1] + mu * coefficients[0:count]
    return coefficients


def casimirs_from_spectrum(spectrum: Spectrum) -> CasimirSet:
    """I_k as the k-th elementary symmetric polynomial of the eigenvalues."""
    e = elementary_symmetric(spectrum.values)
    return CasimirSet(n_levels=spectrum.n_levels, values=[float(v) for v in e[1:]])


def power_traces(rho: DensityMatrix, highest: Optional[int] = None) -> np.ndarray:
    """t_k = Tr[rho^k] for k = 1..highest (default N)."""
    highest = rho.n_levels if highest is None else highest
    traces = np.zeros(highest)
    power = np.eye(rho.n_levels, dtype=np.complex128)
    for k in range(highest):
        power = power @ rho.entries
        traces[k] = float(np.real(np.trace(power)))
    return traces


def casimirs_from_traces(rho: DensityMatrix) -> CasimirSet:
    """
    I_k from power traces via Newton's identities:

        k I_k = sum_{i=1..k} (-1)^(i-1) I_(k-i) t_i,   I_0 = 1
    """
    n = rho.n_levels
    traces = power_traces(rho)
    e = np.zeros(n + 1)
    e[0] = 1.0
    for k in range(1, n + 1):
        total = 0.0
        for i in range(1, k + 1):
            total += (-1) ** (i - 1) * e[k - i] * traces[i - 1]
        e[k] = total / k
    return CasimirSet(n_levels=n, values=[float(v) for v in e[1:]])


def characteristic_residual(rho: DensityMatrix, casimirs: CasimirSet) -> float:
    """
    Max-entry norm of rho^N - I_1 rho^(N-1) + ... + (-1)^N I_N (Cayley-Hamilton).
    """
    n = rho.n_levels
    if casimirs.n_levels != n:
        raise DimensionMismatchError(f"Casimirs are for N={casimirs.n_levels}, state has N={n}")
    identity = np.eye(n, dtype=np.complex128)
    accumulator = identity.copy()
    # Horner: ((rho - I_1) rho + I_2) rho - ...
    for k in range(1, n + 1):
        accumulator = accumulator @ rho.entries + (-1) ** k * casimirs.invariant(k) * identity
    return float(np.max(np.abs(accumulator)))


def boundary_vanishing(spectrum: Spectrum, tolerance: Optional[float] = None) -> BoundaryStatus:
    """
    Boundary membership from vanishing Casimirs.

    One zero eigenvalue (I_N = 0) puts the state on the boundary of the
    simplex; two zeros (I_(N-1) = I_N = 0) put it on a boundary edge.
    Zero means below the positivity tolerance.
    """
    tol = resolve_tolerance("positivity", tolerance)
    zeros = int(np.sum(np.abs(spectrum.values) <= tol))
    status = BoundaryStatus(is_boundary=zeros >= 1, is_edge=zeros >= 2)
    logger.debug("boundary_checked", n_levels=spectrum.n_levels, zero_eigenvalues=zeros)
    return status
