"""
Stratum Classification

Orbits of U(N) acting by conjugation are labelled by the degeneracy pattern of
the spectrum. Blocks of k equal eigenvalues give a little group prod U(k_i)
and an orbit U(N)/prod U(k_i) of dimension N^2 - sum k_i^2. Strata are in
one-to-one correspondence with the partitions of N.
"""

from typing import Generator, List, Optional, Sequence, Tuple

import numpy as np

from chamber.models import Spectrum, StratumInfo, StratumKind
from core.config import resolve_tolerance
from core.logging_config import get_logger

logger = get_logger(__name__)


def degeneracy_blocks(spectrum: Spectrum, degeneracy_tol: Optional[float] = None) -> List[List[float]]:
    """
    Single-linkage clusters of the descending eigenvalues.

    Neighbours closer than degeneracy_tol share a block, so the result does not
    depend on the input order.
    """
    tol = resolve_tolerance("degeneracy", degeneracy_tol)
    ordered = np.sort(spectrum.values)[::-1]
    blocks = [[float(ordered[0])]]
    for previous, value in zip(ordered[:-1], ordered[1:]):
        if previous - value < tol:
            blocks[-1].append(float(value))
        else:
            blocks.append([float(value)])
    return blocks


def classify(
    spectrum: Spectrum,
    degeneracy_tol: Optional[float] = None,
    positivity_tol: Optional[float] = None,
) -> StratumInfo:
    """
    Stratum of a spectrum.

    Args:
        spectrum: Any point of the simplex, in any order
        degeneracy_tol: Gap below which neighbouring eigenvalues are equal
        positivity_tol: Tolerance for recognising the eigenvalue 1 of a pure state

    Returns:
        StratumInfo with partition, little group, orbit dimension and kind
    """
    pos_tol = resolve_tolerance("positivity", positivity_tol)
    blocks = degeneracy_blocks(spectrum, degeneracy_tol)
    n = spectrum.n_levels

    partition = sorted((len(block) for block in blocks), reverse=True)
    orbit_dim = n * n - sum(k * k for k in partition)

    if len(partition) == 1:
        kind = StratumKind.FIXED_POINT
    elif float(np.max(spectrum.values)) >= 1.0 - pos_tol:
        kind = StratumKind.PURE
    elif all(k == 1 for k in partition):
        kind = StratumKind.GENERIC
    elif partition == [n - 1, 1]:
        kind = StratumKind.CRITICAL
    else:
        kind = StratumKind.DEGENERATE

    return StratumInfo(
        n_levels=n,
        partition=partition,
        little_group=[f"U({k})" for k in partition],
        orbit_dim=orbit_dim,
        kind=kind,
    )


def enumerate_partitions(n: int, largest: Optional[int] = None) -> Generator[Tuple[int, ...], None, None]:
    """Integer partitions of n as non-increasing tuples, largest first part first."""
    if n < 0:
        raise ValueError(f"cannot partition a negative number: {n}")
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in enumerate_partitions(n - first, first):
            yield (first,) + rest


def count_strata(n_levels: int) -> int:
    """
    Number of strata: the partition number p(N).

    Uses the standard coin-change recurrence over part sizes.
    """
    if n_levels < 1:
        raise ValueError(f"n_levels must be >= 1, got {n_levels}")
    counts = [1] + [0] * n_levels
    for part in range(1, n_levels + 1):
        for total in range(part, n_levels + 1):
            counts[total] += counts[total - part]
    return counts[n_levels]


def representative_spectrum(partition: Sequence[int]) -> Spectrum:
    """
    A spectrum whose degeneracy pattern is exactly `partition`.

    Block j gets weight j + 1, so blocks are well separated.
    """
    partition = [int(k) for k in partition]
    if not partition or any(k < 1 for k in partition):
        raise ValueError(f"invalid partition {partition}")
    weights = np.concatenate([np.full(k, j + 1.0) for j, k in enumerate(partition)])
    return Spectrum.from_values(weights[::-1] / np.sum(weights))


def stratum_census(n_levels: int) -> List[Tuple[Spectrum, StratumInfo]]:
    """
    One representative per stratum, ordered by orbit dimension.

    The [N-1, 1] stratum is represented by the pure vertex (1, 0, ..., 0).
    """
    census = []
    for partition in enumerate_partitions(n_levels):
        if n_levels >= 3 and list(partition) == [n_levels - 1, 1]:
            values = np.zeros(n_levels)
            values[0] = 1.0
            spectrum = Spectrum.from_values(values)
        else:
            spectrum = representative_spectrum(partition)
        census.append((spectrum, classify(spectrum)))

    census.sort(key=lambda item: (item[1].orbit_dim, [-k for k in item[1].partition]))
    logger.debug("stratum_census_built", n_levels=n_levels, strata=len(census))
    return census
