"""Entrypoint: ``python -m src.main <subcomando> ...`` equivale ao console script ``sympdec``."""

import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
