"""Main entry point for the toughham command line."""

import sys

from src.harness.cli import main

if __name__ == "__main__":
    sys.exit(main())
