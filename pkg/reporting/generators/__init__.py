"""
Report Generators

Report generator classes for state classification and chamber geometry tables.
"""

from reporting.generators.base import BaseReportGenerator
from reporting.generators.geometry_tables import GeometryTablesGenerator
from reporting.generators.state_report import StateReportGenerator

__all__ = [
    "BaseReportGenerator",
    "GeometryTablesGenerator",
    "StateReportGenerator",
]
