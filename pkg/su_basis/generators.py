"""
Generalized Gell-Mann Basis

Builds the orthonormal basis of traceless Hermitian N x N matrices with
Tr[l_i l_j] = 2 delta_ij. Canonical order: symmetric off-diagonal pairs
(row-major over j < k), antisymmetric pairs in the same order, then the
N - 1 diagonal generators.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from core.logging_config import get_logger

logger = get_logger(__name__)


SYMMETRIC = "S"
ANTISYMMETRIC = "A"
DIAGONAL = "D"

# Conventional SU(3) names mapped to (kind, j, k), 1-based like the labels.
_GELL_MANN_SU3 = {
    1: (SYMMETRIC, 1, 2),
    2: (ANTISYMMETRIC, 1, 2),
    3: (DIAGONAL, 1, 0),
    4: (SYMMETRIC, 1, 3),
    5: (ANTISYMMETRIC, 1, 3),
    6: (SYMMETRIC, 2, 3),
    7: (ANTISYMMETRIC, 2, 3),
    8: (DIAGONAL, 2, 0),
}


@dataclass(frozen=True, eq=False)
class BasisSet:
    """
    Ordered generalized Gell-Mann matrices for an N-level system.

    The matrix stack is stored read-only so a constructed basis can be shared.
    """
    n_levels: int
    matrices: np.ndarray
    keys: Tuple[Tuple[str, int, int], ...] = field(repr=False)

    def __len__(self) -> int:
        return self.matrices.shape[0]

    def __getitem__(self, index: int) -> np.ndarray:
        return self.matrices[index]

    def __iter__(self):
        return iter(self.matrices)

    @property
    def dimension(self) -> int:
        return self.n_levels ** 2 - 1

    @property
    def labels(self) -> List[str]:
        """Human readable labels, e.g. S(1,2), A(1,2), D1."""
        out = []
        for kind, j, k in self.keys:
            out.append(f"{kind}{j}" if kind == DIAGONAL else f"{kind}({j},{k})")
        return out

    @property
    def diagonal_indices(self) -> List[int]:
        return list(range(self.dimension - (self.n_levels - 1), self.dimension))

    def index_of(self, kind: str, j: int, k: int = 0) -> int:
        """
        Position of a generator in the canonical order.

        Args:
            kind: "S", "A" or "D"
            j: first level (1-based); for "D" the diagonal generator number
            k: second level (1-based), ignored for "D"
        """
        key = (kind, j, 0 if kind == DIAGONAL else k)
        try:
            return self.keys.index(key)
        except ValueError:
            raise ValueError(f"no generator {kind}({j},{k}) for N={self.n_levels}") from None

    def as_array(self) -> np.ndarray:
        return self.matrices


def _symmetric(n: int, j: int, k: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=np.complex128)
    m[j, k] = 1.0
    m[k, j] = 1.0
    return m


def _antisymmetric(n: int, j: int, k: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=np.complex128)
    m[j, k] = -1.0j
    m[k, j] = 1.0j
    return m


def _diagonal(n: int, l: int) -> np.ndarray:
    # l-th generator ~ diag(1,...,1,-l,0,...,0), normalized to Tr[g^2] = 2
    entries = np.zeros(n, dtype=np.complex128)
    entries[:l] = 1.0
    entries[l] = -l
    return np.sqrt(2.0 / (l * (l + 1))) * np.diag(entries)


@lru_cache(maxsize=16)
def build_basis(n_levels: int) -> BasisSet:
    """
    Build the orthonormal generalized Gell-Mann basis.

    Args:
        n_levels: Hilbert space dimension N >= 2

    Returns:
        BasisSet with N^2 - 1 matrices in canonical order

    Raises:
        ValueError: If n_levels < 2
    """
    if not isinstance(n_levels, (int, np.integer)) or n_levels < 2:
        raise ValueError(f"n_levels must be an integer >= 2, got {n_levels!r}")
    n = int(n_levels)

    pairs = [(j, k) for j in range(n) for k in range(j + 1, n)]
    matrices = []
    keys = []

    for j, k in pairs:
        matrices.append(_symmetric(n, j, k))
        keys.append((SYMMETRIC, j + 1, k + 1))

    for j, k in pairs:
        matrices.append(_antisymmetric(n, j, k))
        keys.append((ANTISYMMETRIC, j + 1, k + 1))

    for l in range(1, n):
        matrices.append(_diagonal(n, l))
        keys.append((DIAGONAL, l, 0))

    stack = np.array(matrices)
    stack.setflags(write=False)

    logger.debug("basis_built", n_levels=n, count=len(matrices))
    return BasisSet(n_levels=n, matrices=stack, keys=tuple(keys))


def gell_mann_index(label: int, basis: BasisSet) -> int:
    """
    Canonical index of the conventional SU(3) matrix lambda_label (1..8).

    Only meaningful for N = 3 bases.
    """
    if basis.n_levels != 3:
        raise ValueError("Gell-Mann labels are defined for N=3 only")
    if label not in _GELL_MANN_SU3:
        raise ValueError(f"Gell-Mann label must be in 1..8, got {label}")
    return basis.index_of(*_GELL_MANN_SU3[label])


def expand(hermitian: np.ndarray, basis: BasisSet) -> np.ndarray:
    """Real components Tr[H l_i] / 2 of a traceless Hermitian matrix."""
    coefficients = np.einsum("ab,iba->i", hermitian, basis.matrices) / 2.0
    return coefficients.real


def synthesize(components: np.ndarray, basis: BasisSet) -> np.ndarray:
    """Sum_i c_i l_i for real components c."""
    return np.tensordot(np.asarray(components, dtype=float), basis.matrices, axes=1)
