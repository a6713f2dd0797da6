#!/usr/bin/env python3
"""Run the bundled three-area case and print the ranked report."""

import sys

from greyrisk.cli import main

if __name__ == "__main__":
    sys.exit(main(["demo", *sys.argv[1:]]))
