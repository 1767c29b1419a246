#!/usr/bin/env python3
"""
Linear Hypergraph Toolkit - Main Entry Point

Builds, checks and searches 3-uniform linear hypergraphs avoiding Berge and
linear cycles. Run ``python main.py --help`` for the subcommands.
"""

import sys

from src.ui.cli import run


def main() -> int:
    """
    Main entry point for the application.

    Returns:
        Exit code (0 success, 1 error, 2 witness found, 3 budget exceeded)
    """
    try:
        return run(sys.argv[1:])
    except KeyboardInterrupt:
        print("\n\nInterrupted by user. Exiting...", file=sys.stderr)
        return 1
    except Exception as e:
        print(f"\nAn error occurred: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
