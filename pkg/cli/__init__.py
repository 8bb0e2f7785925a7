"""
Command line surface of the toolkit.
"""

from cli.commands import EXIT_INVALID_STATE, EXIT_IO_FAILURE, cli

__all__ = ["EXIT_INVALID_STATE", "EXIT_IO_FAILURE", "cli"]
