"""
Report Exporters

Export report data to CSV.
"""

from reporting.exporters.csv_exporter import CSVExporter

__all__ = ["CSVExporter"]
