#!/usr/bin/env python3
"""Ensemble variance / concentration / mean-channel / spike checks.

Same as `qpsqlab bounds`.  This is the one subcommand where --jobs helps;
output bytes are identical regardless of the worker count.
"""

import sys

from qpsqlab.cli import main

if __name__ == "__main__":
    sys.exit(main(["bounds", *sys.argv[1:]]))
