"""
Main entry point for the bigcell command line

    python app.py <verb> <op> [arguments] [--json]
"""

import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from src.cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
