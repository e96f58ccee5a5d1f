#!/usr/bin/env python3
"""Leuvenshtein - Run Script"""

import sys

from leuvenshtein.cli import main

if __name__ == "__main__":
    sys.exit(main())
