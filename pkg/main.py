"""
Main entry point for the wedge-casimir command line.

Runs the typer app from a source checkout without installing the package.
"""

import sys
from pathlib import Path

# Add src to path for development
sys.path.insert(0, str(Path(__file__).parent / "src"))

from wedge_casimir.main import main


if __name__ == "__main__":
    main()
