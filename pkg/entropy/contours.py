"""
Entropy Surface and Isentropic Contours (N = 3)

The N=3 Weyl chamber is the triangle with vertices O = (1/3, 1/3, 1/3),
Q = (1/2, 1/2, 0) and P = (1, 0, 0) in barycentric eigenvalue coordinates.
It is sampled on its own uniform barycentric grid, so the chamber walls OP,
OQ and QP are grid lines. Contours come from marching triangles over that
grid: linear interpolation locates the crossing on each cell edge and a
bisection pass along the edge refines it.
"""

import math
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import bisect

from core.config import get_config, resolve_tolerance
from core.logging_config import get_logger
from entropy.functions import entropy_of_points
from entropy.models import ContourSet, Point

logger = get_logger(__name__)

CHAMBER_VERTICES = {
    "O": (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0),
    "Q": (0.5, 0.5, 0.0),
    "P": (1.0, 0.0, 0.0),
}

EdgeKey = Tuple[int, int]


def _require_qutrit(n_levels: int) -> None:
    if n_levels != 3:
        raise ValueError(f"entropy surfaces and contours are implemented for N=3 only, got N={n_levels}")


def _require_resolution(resolution: int) -> None:
    if resolution < 2:
        raise ValueError(f"resolution must be >= 2, got {resolution}")


def chamber_grid(resolution: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Uniform barycentric grid of the chamber triangle O-Q-P.

    Returns:
        (index, points): index[i, j] is the row of grid point (i, j) or -1, where
        i counts steps towards O and j towards Q; points is (M, 3) with
        M = (r + 1)(r + 2) / 2 rows (x, y, z), x >= y >= z >= 0.
    """
    _require_resolution(resolution)
    r = resolution
    index = np.full((r + 1, r + 1), -1, dtype=int)
    rows = []
    for i in range(r + 1):
        for j in range(r + 1 - i):
            w_o = i / r
            w_q = j / r
            w_p = (r - i - j) / r
            # Build from z upward so the chamber ordering holds exactly in floats.
            z = w_o / 3.0
            y = z + w_q / 2.0
            x = y + w_p
            index[i, j] = len(rows)
            rows.append((x, y, z))
    return index, np.array(rows)


def _triangles(index: np.ndarray, resolution: int) -> np.ndarray:
    r = resolution
    triangles = []
    for i in range(r):
        for j in range(r - i):
            triangles.append((index[i, j], index[i + 1, j], index[i, j + 1]))
            if j < r - i - 1:
                triangles.append((index[i + 1, j], index[i + 1, j + 1], index[i, j + 1]))
    return np.array(triangles, dtype=int)


def entropy_surface(n_levels: int, resolution: int, tolerance: Optional[float] = None) -> np.ndarray:
    """
    Entropy over the chamber grid as rows (x, y, z, eta).

    Rows follow chamber_grid order; the vertices O, Q, P are grid points.
    """
    _require_qutrit(n_levels)
    _, points = chamber_grid(resolution)
    eta = entropy_of_points(points, tolerance)
    logger.debug("entropy_surface_sampled", resolution=resolution, rows=len(points))
    return np.column_stack([points, eta])


def _eta(point: np.ndarray, tol: float) -> float:
    return float(entropy_of_points(point[np.newaxis, :], tol)[0])


def _edge_crossing(
    start: np.ndarray,
    end: np.ndarray,
    level: float,
    refine: bool,
    tol: float,
) -> np.ndarray:
    def g(t: float) -> float:
        return _eta(start + t * (end - start), tol) - level

    g0, g1 = g(0.0), g(1.0)
    if g0 == g1:
        return start.copy()
    t_linear = min(max(g0 / (g0 - g1), 0.0), 1.0)
    if not refine:
        return start + t_linear * (end - start)

    if (g0 >= 0.0) == (g1 >= 0.0):
        # Sign flip lost to rounding at an endpoint: take the closer endpoint.
        return start.copy() if abs(g0) <= abs(g1) else end.copy()

    g_mid = g(t_linear)
    if g_mid == 0.0:
        t = t_linear
    elif (g_mid >= 0.0) == (g0 >= 0.0):
        t = bisect(g, t_linear, 1.0, xtol=1e-13)
    else:
        t = bisect(g, 0.0, t_linear, xtol=1e-13)
    return start + t * (end - start)


def _stitch(segments: List[Tuple[EdgeKey, EdgeKey]]) -> List[List[EdgeKey]]:
    """Chain segments sharing crossing edges into polylines; open lines first."""
    incident: Dict[EdgeKey, List[int]] = {}
    for position, (first, second) in enumerate(segments):
        incident.setdefault(first, []).append(position)
        incident.setdefault(second, []).append(position)

    used = [False] * len(segments)

    def walk(start: EdgeKey) -> List[EdgeKey]:
        line = [start]
        current = start
        while True:
            nxt = next((s for s in incident[current] if not used[s]), None)
            if nxt is None:
                return line
            used[nxt] = True
            first, second = segments[nxt]
            current = second if first == current else first
            line.append(current)

    polylines = []
    for key in sorted(k for k, members in incident.items() if len(members) == 1):
        if not used[incident[key][0]]:
            polylines.append(walk(key))
    for position in range(len(segments)):
        if not used[position]:
            polylines.append(walk(min(segments[position])))
    return polylines


def isentropic_contours(
    n_levels: int,
    level: float,
    resolution: Optional[int] = None,
    refine: bool = True,
    tolerance: Optional[float] = None,
    contour_tolerance: Optional[float] = None,
) -> ContourSet:
    """
    Level set eta = level over the N=3 chamber.

    Args:
        n_levels: Must be 3
        level: Entropy level in nats, 0 < level < log 3
        resolution: Grid subdivisions per chamber edge (configured default 200)
        refine: Bisect each linear-interpolation vertex onto the level set
        tolerance: Positivity tolerance for the entropy evaluation
        contour_tolerance: Bound on |eta - level| at the vertices (configured default 1e-3)

    Returns:
        ContourSet; empty with degenerate_point "O" or "P" at level log 3 or 0,
        empty without a point for levels outside [0, log 3]. Vertices further than
        the contour tolerance from the level are reported through
        max_deviation and within_tolerance, and logged as a warning.

    Raises:
        ValueError: For N other than 3, resolution < 2 or a non-finite level
    """
    _require_qutrit(n_levels)
    if not math.isfinite(level):
        raise ValueError(f"contour level must be finite, got {level}")
    resolution = resolution if resolution is not None else get_config().contour.resolution
    _require_resolution(resolution)
    tol = resolve_tolerance("positivity", tolerance)
    limit = resolve_tolerance("contour", contour_tolerance)
    algebraic = resolve_tolerance("algebraic")
    maximum = math.log(3.0)

    if level >= maximum or level <= 0.0:
        degenerate = None
        if abs(level - maximum) <= algebraic:
            degenerate = "O"
        elif abs(level) <= algebraic:
            degenerate = "P"
        logger.warning("contour_level_out_of_range", level=level, maximum=maximum, degenerate_point=degenerate)
        return ContourSet(level=level, polylines=[], degenerate_point=degenerate)

    index, points = chamber_grid(resolution)
    above = entropy_of_points(points, tol) >= level
    triangles = _triangles(index, resolution)
    counts = above[triangles].sum(axis=1)
    crossing = triangles[(counts == 1) | (counts == 2)]

    cache: Dict[EdgeKey, np.ndarray] = {}
    segments: List[Tuple[EdgeKey, EdgeKey]] = []
    for triangle in crossing:
        keys = []
        for a, b in ((triangle[0], triangle[1]), (triangle[1], triangle[2]), (triangle[2], triangle[0])):
            if above[a] != above[b]:
                key = (int(min(a, b)), int(max(a, b)))
                if key not in cache:
                    cache[key] = _edge_crossing(points[key[0]], points[key[1]], level, refine, tol)
                keys.append(key)
        segments.append((keys[0], keys[1]))

    polylines: List[List[Point]] = []
    for line in _stitch(segments):
        polylines.append([tuple(float(c) for c in cache[key]) for key in line])

    deviation = _deviation(polylines, level, tol)
    contours = ContourSet(
        level=level,
        polylines=polylines,
        max_deviation=deviation,
        within_tolerance=deviation < limit,
    )
    if not contours.within_tolerance:
        logger.warning(
            "contour_tolerance_exceeded",
            level=level,
            resolution=resolution,
            refine=refine,
            max_deviation=deviation,
            tolerance=limit,
        )
    logger.debug(
        "contour_extracted",
        level=level,
        resolution=resolution,
        polylines=len(polylines),
        points=contours.point_count,
    )
    return contours


def _deviation(polylines: List[List[Point]], level: float, tol: Optional[float]) -> float:
    points = [point for line in polylines for point in line]
    if not points:
        return 0.0
    eta = entropy_of_points(np.array(points), tol)
    return float(np.max(np.abs(eta - level)))


def max_level_deviation(contours: ContourSet, tolerance: Optional[float] = None) -> float:
    """max |eta(point) - level| over every contour vertex (0 for an empty set)."""
    return _deviation(contours.polylines, contours.level, tolerance)


def op_line_crossing(level: float, tolerance: Optional[float] = None) -> Point:
    """
    Point (x, y, y) on the chamber wall OP with entropy `level`, by bisection.

    Entropy falls monotonically from log 3 at O to 0 at P along the wall.
    """
    if not 0.0 < level < math.log(3.0):
        raise ValueError(f"level must lie in (0, log 3), got {level}")
    tol = resolve_tolerance("positivity", tolerance)

    def g(x: float) -> float:
        rest = (1.0 - x) / 2.0
        return _eta(np.array([x, rest, rest]), tol) - level

    x = bisect(g, 1.0 / 3.0, 1.0, xtol=1e-15)
    rest = (1.0 - x) / 2.0
    return (float(x), float(rest), float(rest))
