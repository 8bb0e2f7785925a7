"""
JSON Serialization

Codecs between library objects and the JSON documents read and written by the
command line. Complex matrices are stored row-major as [re, im] pairs; floats
are rounded to a fixed number of significant digits so output is byte-stable.
The formats are documented in docs/SCHEMAS.md.
"""

import json
import math
from typing import Any, List, Optional, Union

import numpy as np
from pydantic import BaseModel

from chamber.models import Spectrum
from core.config import get_config
from entropy.models import ContourSet
from states.models import CoherenceVector, DecodeResult, DensityMatrix
from su_basis.generators import BasisSet


class StateParseError(ValueError):
    """Input text is not one of the accepted JSON document shapes."""


def round_significant(value: float, digits: int) -> float:
    """Round to `digits` significant digits; -0.0 becomes 0.0."""
    if not math.isfinite(value):
        return value
    return float(f"{value:.{digits}g}") + 0.0


def normalize(payload: Any, digits: int) -> Any:
    """Recursively convert numpy values and pydantic models to rounded JSON types."""
    if isinstance(payload, BaseModel):
        return normalize(payload.model_dump(mode="json"), digits)
    if isinstance(payload, dict):
        return {str(key): normalize(value, digits) for key, value in payload.items()}
    if isinstance(payload, (list, tuple)):
        return [normalize(value, digits) for value in payload]
    if isinstance(payload, np.ndarray):
        return normalize(payload.tolist(), digits)
    if isinstance(payload, (bool, np.bool_)):
        return bool(payload)
    if isinstance(payload, (int, np.integer)):
        return int(payload)
    if isinstance(payload, (float, np.floating)):
        return round_significant(float(payload), digits)
    return payload


def dumps(payload: Any, digits: Optional[int] = None) -> str:
    """JSON text with the configured significant digits (12 by default)."""
    digits = digits if digits is not None else get_config().output.json_digits
    return json.dumps(normalize(payload, digits), indent=2) + "\n"


def matrix_entries(matrix: np.ndarray) -> List[List[float]]:
    """Row-major [re, im] pairs."""
    flat = np.asarray(matrix, dtype=np.complex128).reshape(-1)
    return [[float(z.real), float(z.imag)] for z in flat]


def density_matrix_payload(rho: DensityMatrix) -> dict:
    return {"n": rho.n_levels, "entries": matrix_entries(rho.entries)}


def basis_payload(basis: BasisSet) -> dict:
    return {
        "n": basis.n_levels,
        "count": len(basis),
        "labels": basis.labels,
        "matrices": [matrix_entries(matrix) for matrix in basis],
    }


def coherence_payload(vector: CoherenceVector) -> dict:
    return {"n": vector.n_levels, "components": vector.components.tolist(), "norm": vector.norm}


def decode_payload(result: DecodeResult) -> dict:
    return {
        "n": result.matrix.shape[0],
        "entries": matrix_entries(result.matrix),
        "valid": result.is_valid,
        "min_eigenvalue": result.min_eigenvalue,
        "diagnostic": result.diagnostic,
    }


def contour_payload(contours: ContourSet) -> dict:
    return {
        "n": 3,
        "level": contours.level,
        "degenerate_point": contours.degenerate_point,
        "point_count": contours.point_count,
        "max_deviation": contours.max_deviation,
        "within_tolerance": contours.within_tolerance,
        "polylines": [[list(point) for point in line] for line in contours.polylines],
    }


def parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise StateParseError(f"input is not valid JSON: {e}") from e


def _matrix_from_entries(entries: Any, n_levels: Optional[int]) -> np.ndarray:
    try:
        array = np.array(entries, dtype=float)
    except (TypeError, ValueError) as e:
        raise StateParseError(f"matrix entries must be numeric: {e}") from e

    if array.ndim == 3 and array.shape[2] == 2:
        matrix = array[..., 0] + 1j * array[..., 1]
    elif array.ndim == 2 and array.shape[0] == array.shape[1] and (n_levels is None or array.shape[0] == n_levels):
        matrix = array.astype(np.complex128)
    elif array.ndim == 2 and array.shape[1] == 2:
        side = math.isqrt(array.shape[0])
        if side * side != array.shape[0]:
            raise StateParseError(f"{array.shape[0]} entries do not form a square matrix")
        matrix = (array[:, 0] + 1j * array[:, 1]).reshape(side, side)
    else:
        raise StateParseError(f"unrecognised matrix layout with shape {array.shape}")

    if n_levels is not None and matrix.shape != (n_levels, n_levels):
        raise StateParseError(f"declared n={n_levels} but matrix has shape {matrix.shape}")
    return matrix


def state_from_document(document: Any, tolerance: Optional[float] = None) -> Union[DensityMatrix, Spectrum]:
    """
    Interpret a parsed JSON document as a state.

    Accepted shapes: {"n", "entries"} (flat [re, im] pairs or nested rows),
    {"spectrum": [...]}, a bare list of numbers (a spectrum) and a bare list
    of rows (a matrix).

    Raises:
        StateParseError: For any other shape
        InvalidStateError: If a matrix fails the state conditions
        OutOfSimplexError: If a spectrum is not a probability vector
    """
    if isinstance(document, dict):
        n_levels = _declared_levels(document)
        if "entries" in document:
            matrix = _matrix_from_entries(document["entries"], n_levels)
            return DensityMatrix.from_array(matrix, tolerance=tolerance)
        if "spectrum" in document:
            values = _numbers(document["spectrum"])
            if n_levels is not None and len(values) != n_levels:
                raise StateParseError(f"declared n={n_levels} but spectrum has {len(values)} values")
            return Spectrum.from_values(values, tolerance=tolerance)
        raise StateParseError("state object needs an 'entries' or 'spectrum' key")

    if isinstance(document, list) and document:
        if all(_is_number(value) for value in document):
            return Spectrum.from_values(document, tolerance=tolerance)
        if all(isinstance(row, list) for row in document):
            return DensityMatrix.from_array(_matrix_from_entries(document, None), tolerance=tolerance)
    raise StateParseError("input is neither a density matrix nor a spectrum")


def vector_from_document(document: Any) -> CoherenceVector:
    """
    Interpret {"n", "components"} or a bare list as a coherence vector.

    N is inferred from the length N^2 - 1 when not declared.
    """
    if isinstance(document, dict) and "components" in document:
        components = _numbers(document["components"])
        n_levels = _declared_levels(document)
    elif isinstance(document, list):
        components = _numbers(document)
        n_levels = None
    else:
        raise StateParseError("coherence vector needs a 'components' list")

    if not all(math.isfinite(c) for c in components):
        raise StateParseError("coherence vector components must be finite")
    if n_levels is None:
        n_levels = math.isqrt(len(components) + 1)
        if n_levels * n_levels != len(components) + 1 or n_levels < 2:
            raise StateParseError(f"{len(components)} components is not N^2 - 1 for any N >= 2")
    try:
        return CoherenceVector.from_components(int(n_levels), components)
    except ValueError as e:
        raise StateParseError(str(e)) from e


def _declared_levels(document: dict) -> Optional[int]:
    """The optional "n" key: an integer >= 2 when present."""
    n_levels = document.get("n")
    if n_levels is None:
        return None
    if isinstance(n_levels, bool) or not isinstance(n_levels, int) or n_levels < 2:
        raise StateParseError(f"\"n\" must be an integer >= 2, got {n_levels!r}")
    return n_levels


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _numbers(values: Any) -> List[float]:
    if not isinstance(values, list) or not all(_is_number(v) for v in values):
        raise StateParseError("expected a list of numbers")
    return [float(v) for v in values]


__all__ = [
    "StateParseError",
    "basis_payload",
    "coherence_payload",
    "contour_payload",
    "decode_payload",
    "density_matrix_payload",
    "dumps",
    "matrix_entries",
    "normalize",
    "parse_json",
    "round_significant",
    "state_from_document",
    "vector_from_document",
]
