"""
CSV Report Exporter

Writes surface, contour, profile and table data as CSV for plotting tools.
Floats are written with a fixed number of significant digits (6 by default).
"""

import csv
from typing import Any, Dict, List, Optional, TextIO

from core.config import get_config


class CSVExporter:
    """
    Exports report data to CSV.

    Each known report shape has its own row layout; anything else is
    flattened into a single row.
    """

    def __init__(self, digits: Optional[int] = None):
        """
        Initialize the CSV exporter.

        Args:
            digits: Significant digits for floats (configured default when None)
        """
        self.digits = digits if digits is not None else get_config().output.csv_digits

    def export(self, report_data: Dict[str, Any], stream: TextIO) -> int:
        """
        Write report data to a text stream.

        Args:
            report_data: Report data dictionary
            stream: Destination opened in text mode

        Returns:
            Number of data rows written
        """
        rows = self._convert_to_rows(report_data)
        fieldnames: List[str] = []
        for row in rows:
            for key in row:
                if key not in fieldnames:
                    fieldnames.append(key)

        writer = csv.DictWriter(stream, fieldnames=fieldnames, restval="", lineterminator="\n")
        if fieldnames:
            writer.writeheader()
        for row in rows:
            writer.writerow({key: self._format(value) for key, value in row.items()})
        return len(rows)

    def _convert_to_rows(self, report_data: Dict[str, Any]) -> List[Dict[str, Any]]:
        if "surface" in report_data:
            return [dict(zip(("x", "y", "z", "eta"), row)) for row in report_data["surface"]]

        if "polylines" in report_data:
            return self._convert_polylines(report_data["polylines"])

        if "profile" in report_data:
            return [{"t": t, "eta": eta} for t, eta in report_data["profile"]]

        if "special_points" in report_data:
            return self._convert_tables(report_data)

        if "samples" in report_data:
            return [self._flatten_dict(sample) for sample in report_data["samples"]]

        return [self._flatten_dict(report_data)]

    def _convert_polylines(self, polylines: List[List[Any]]) -> List[Dict[str, Any]]:
        """One row per contour vertex, keyed by polyline and position."""
        rows = []
        for line_id, line in enumerate(polylines):
            for position, (x, y, z) in enumerate(line):
                rows.append({"polyline": line_id, "index": position, "x": x, "y": y, "z": z})
        return rows

    def _convert_tables(self, tables: Dict[str, Any]) -> List[Dict[str, Any]]:
        """Stack the three geometry tables, tagged by a section column."""
        rows = []
        for section in ("special_points", "distances", "strata"):
            for entry in tables.get(section, []):
                rows.append({"section": section, **self._flatten_dict(entry)})
        return rows

    def _format(self, value: Any) -> Any:
        if isinstance(value, float):
            return f"{value + 0.0:.{self.digits}g}"
        return value

    def _flatten_dict(
        self,
        d: Dict[str, Any],
        parent_key: str = "",
        sep: str = "_"
    ) -> Dict[str, Any]:
        """
        Flatten nested dictionary.

        Lists are joined with spaces, floats formatted to the configured digits.
        """
        items = []
        for k, v in d.items():
            new_key = f"{parent_key}{sep}{k}" if parent_key else k

            if isinstance(v, dict):
                items.extend(self._flatten_dict(v, new_key, sep=sep).items())
            elif isinstance(v, (list, tuple)):
                items.append((new_key, " ".join(str(self._format(x)) for x in v)))
            else:
                items.append((new_key, v))

        return dict(items)
