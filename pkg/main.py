#!/usr/bin/env python3
"""
Density State Geometry Toolkit - Main Application

Console entry point; see cli/commands.py for the subcommands.

Usage:
    python main.py --help
    python main.py tables --n 4
"""

import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).resolve().parent))

from cli import cli  # noqa: E402


def main():
    """Run the command line interface."""
    cli(prog_name="qgeom")


if __name__ == "__main__":
    main()
