"""
Density State Geometry Toolkit - Core Module

Configuration management, structured logging and shared tolerances.
"""

__version__ = "1.0.0"
