"""
Random State Sampling

Haar-random unitaries from the QR decomposition of a complex Ginibre matrix,
and unitarily invariant random states: a flat-Dirichlet spectrum conjugated by
a Haar unitary. Everything is deterministic for a fixed seed.
"""

from typing import Union

import numpy as np
from scipy.linalg import qr

from core.config import get_config
from states.models import DensityMatrix

SeedLike = Union[int, np.random.Generator, None]


def _rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    if seed is None:
        seed = get_config().sampling.seed
    return np.random.default_rng(seed)


def haar_unitary(n_levels: int, seed: SeedLike = None) -> np.ndarray:
    """
    Haar-distributed N x N unitary.

    The phases of diag(R) are folded into Q so the distribution is exactly Haar
    rather than biased by the QR sign convention.
    """
    rng = _rng(seed)
    z = (rng.standard_normal((n_levels, n_levels))
         + 1j * rng.standard_normal((n_levels, n_levels))) / np.sqrt(2.0)
    q, r = qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_density_matrix(n_levels: int, seed: SeedLike = None) -> DensityMatrix:
    """
    Random mixed state: Dirichlet(1,...,1) spectrum conjugated by a Haar unitary.

    Raises:
        ValueError: If n_levels < 2
    """
    if n_levels < 2:
        raise ValueError(f"n_levels must be >= 2, got {n_levels}")
    rng = _rng(seed)
    spectrum = rng.dirichlet(np.ones(n_levels))
    u = haar_unitary(n_levels, rng)
    rho = (u * spectrum) @ u.conj().T
    return DensityMatrix.from_array((rho + rho.conj().T) / 2.0)


def random_pure_state(n_levels: int, seed: SeedLike = None) -> DensityMatrix:
    """Projector onto a uniformly random unit ket."""
    if n_levels < 2:
        raise ValueError(f"n_levels must be >= 2, got {n_levels}")
    rng = _rng(seed)
    ket = rng.standard_normal(n_levels) + 1j * rng.standard_normal(n_levels)
    ket /= np.linalg.norm(ket)
    return DensityMatrix.from_array(np.outer(ket, ket.conj()))


def random_spectrum(n_levels: int, seed: SeedLike = None) -> np.ndarray:
    """Flat-Dirichlet point of the probability simplex (unsorted)."""
    return _rng(seed).dirichlet(np.ones(n_levels))

