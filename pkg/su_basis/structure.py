"""
Structure Constants

Antisymmetric (f) and symmetric (d) structure constants of a generalized
Gell-Mann basis:

    f_ijk = Tr([l_i, l_j] l_k) / (4i)
    d_ijk = Tr({l_i, l_j} l_k) / 4

Both tensors are stored dense, which bounds N: (N^2 - 1)^3 entries is about
250k at N = 8 and grows as N^6 beyond it.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from core.config import get_config, resolve_tolerance
from core.logging_config import get_logger
from su_basis.generators import BasisSet

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class StructureConstants:
    """Dense rank-3 tensors f (antisymmetric) and d (symmetric)."""
    n_levels: int
    f: np.ndarray
    d: np.ndarray

    def nonzero(self, which: str = "f", tolerance: Optional[float] = None) -> List[Tuple[int, int, int, float]]:
        """
        Entries with |value| above tolerance, as (i, j, k, value) with i < j < k for f
        and i <= j <= k for d. Indices are 0-based.
        """
        tol = resolve_tolerance("algebraic", tolerance)
        tensor = self.f if which == "f" else self.d
        entries = []
        for i, j, k in zip(*np.nonzero(np.abs(tensor) > tol)):
            ordered = i < j < k if which == "f" else i <= j <= k
            if ordered:
                entries.append((int(i), int(j), int(k), float(tensor[i, j, k])))
        return entries


def structure_constants(basis: BasisSet, tolerance: Optional[float] = None) -> StructureConstants:
    """
    Compute f_ijk and d_ijk for a basis.

    Args:
        basis: A basis built by build_basis
        tolerance: Bound on discarded imaginary parts (algebraic tolerance by default)

    Returns:
        StructureConstants with real dense tensors

    Raises:
        ValueError: If N exceeds the dense-storage bound or the traces are not real
    """
    tol = resolve_tolerance("algebraic", tolerance)
    limit = get_config().basis.max_structure_levels
    if basis.n_levels > limit:
        raise ValueError(
            f"dense structure constants are limited to N <= {limit}, got N={basis.n_levels}"
        )

    lam = basis.matrices
    # products[i, j] = l_i l_j; triple[i, j, k] = Tr(l_i l_j l_k)
    products = np.einsum("iab,jbc->ijac", lam, lam)
    triple = np.einsum("ijac,kca->ijk", products, lam)
    swapped = triple.transpose(1, 0, 2)

    f = (triple - swapped) / 4.0j
    d = (triple + swapped) / 4.0

    # Loose bound: the traces accumulate rounding over N^2 terms.
    imaginary = max(np.max(np.abs(f.imag)), np.max(np.abs(d.imag)))
    if imaginary > max(tol, 1e-12) * basis.n_levels ** 2:
        raise ValueError(f"structure constants are not real (max imaginary part {imaginary:.3e})")

    f_real = np.ascontiguousarray(f.real)
    d_real = np.ascontiguousarray(d.real)
    f_real.setflags(write=False)
    d_real.setflags(write=False)

    logger.debug("structure_constants_computed", n_levels=basis.n_levels, max_imaginary=float(imaginary))
    return StructureConstants(n_levels=basis.n_levels, f=f_real, d=d_real)
