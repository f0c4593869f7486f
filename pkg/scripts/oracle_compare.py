#!/usr/bin/env python3
"""Per-query error of the gaussian and shadow oracle modes.

Same as `qpsqlab oracle-compare`; kept as a script so the experiment can be
launched from a checkout without installing the entry point.
"""

import sys

from qpsqlab.cli import main

if __name__ == "__main__":
    sys.exit(main(["oracle-compare", *sys.argv[1:]]))
