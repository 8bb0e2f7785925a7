"""
Von Neumann Entropy

eta = -Tr rho log rho = -sum mu_i log mu_i, in nats, with 0 log 0 := 0.
Eigenvalues below the positivity tolerance count as zero.
"""

import math
from typing import List, Optional, Tuple

import numpy as np
from scipy.special import xlogy

from chamber.models import Spectrum
from core.config import resolve_tolerance
from entropy.models import AngleCoords, EntropyValue
from states.models import DimensionMismatchError
from states.operations import purity


def _zero_small(values: np.ndarray, tol: float) -> np.ndarray:
    return np.where(values > tol, values, 0.0)


def entropy(spectrum: Spectrum, tolerance: Optional[float] = None) -> EntropyValue:
    """
    Von Neumann entropy of a spectrum.

    The terms are summed with math.fsum, which is exact up to the final
    rounding, so the result does not depend on eigenvalue order and appending
    zero eigenvalues leaves it unchanged.
    """
    tol = resolve_tolerance("positivity", tolerance)
    values = _zero_small(np.asarray(spectrum.values, dtype=float), tol)
    return EntropyValue(value=math.fsum(-xlogy(values, values)))


def entropy_of_points(points: np.ndarray, tolerance: Optional[float] = None) -> np.ndarray:
    """Row-wise entropy of an (M, N) array of spectra."""
    tol = resolve_tolerance("positivity", tolerance)
    values = _zero_small(np.asarray(points, dtype=float), tol)
    return -np.sum(xlogy(values, values), axis=-1)


def linear_entropy(rho) -> float:
    """1 - Tr[rho^2]; zero exactly on pure states."""
    return 1.0 - purity(rho)


def angles_to_spectrum(n_levels: int, angles: AngleCoords) -> Spectrum:
    """
    Spectrum from angle coordinates.

    N=2: (cos^2(theta/2), sin^2(theta/2))
    N=3: (sin^2(theta/2) cos^2(phi/2), sin^2(theta/2) sin^2(phi/2), cos^2(theta/2))

    Raises:
        ValueError: For N other than 2 or 3
    """
    half_theta = angles.theta / 2.0
    if n_levels == 2:
        values = [math.cos(half_theta) ** 2, math.sin(half_theta) ** 2]
    elif n_levels == 3:
        half_phi = angles.phi / 2.0
        polar = math.sin(half_theta) ** 2
        values = [polar * math.cos(half_phi) ** 2, polar * math.sin(half_phi) ** 2, math.cos(half_theta) ** 2]
    else:
        raise ValueError(f"angle coordinates are defined for N=2 or N=3, got N={n_levels}")
    return Spectrum.from_values(values)


def entropy_from_angles(angles: AngleCoords) -> EntropyValue:
    """N=2 entropy: -cos^2(theta/2) log cos^2(theta/2) - sin^2(theta/2) log sin^2(theta/2)."""
    c2 = math.cos(angles.theta / 2.0) ** 2
    s2 = math.sin(angles.theta / 2.0) ** 2
    return EntropyValue(value=float(-xlogy(c2, c2) - xlogy(s2, s2)))


def line_entropy_profile(
    start: Spectrum,
    end: Spectrum,
    samples: int,
    tolerance: Optional[float] = None,
) -> List[Tuple[float, float]]:
    """
    Entropy along the segment (1 - t) start + t end for `samples` equally spaced t in [0, 1].

    Raises:
        DimensionMismatchError: If the endpoints differ in N
        ValueError: If samples < 2
    """
    if start.n_levels != end.n_levels:
        raise DimensionMismatchError(f"endpoints have N={start.n_levels} and N={end.n_levels}")
    if samples < 2:
        raise ValueError(f"samples must be >= 2, got {samples}")

    profile = []
    for t in np.linspace(0.0, 1.0, samples):
        values = (1.0 - t) * start.values + t * end.values
        point = Spectrum.from_values(values, tolerance=tolerance)
        profile.append((float(t), entropy(point, tolerance).value))
    return profile
