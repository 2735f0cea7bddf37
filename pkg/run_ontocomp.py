#!/usr/bin/env python3
"""
Entry point script for ontocomp.

This script sets up the Python path and runs the command-line interface.
"""

import sys
from pathlib import Path

# Add the current directory to Python path to allow absolute imports
current_dir = Path(__file__).parent
sys.path.insert(0, str(current_dir))

if __name__ == "__main__":
    try:
        from ontocomp_cli import main
        sys.exit(main())
    except KeyboardInterrupt:
        print("\nOperation cancelled by user.", file=sys.stderr)
        sys.exit(130)
