"""
Partial weight one search toolkit.
Main entry point for the command line.
"""

import sys

from cli.main import main

if __name__ == "__main__":
    sys.exit(main())
