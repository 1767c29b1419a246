"""
User interface components.

This module contains the command-line interface of the toolkit.
"""

from .cli import EXIT_BUDGET, EXIT_ERROR, EXIT_OK, EXIT_WITNESS, CliConfig, build_parser, parse_args, run

__all__ = [
    "EXIT_BUDGET",
    "EXIT_ERROR",
    "EXIT_OK",
    "EXIT_WITNESS",
    "CliConfig",
    "build_parser",
    "parse_args",
    "run",
]
