#!/usr/bin/env python3
"""Challenge-response rounds: honest prover vs. offline forgery vs. null.

Same as `qpsqlab protocol`.
"""

import sys

from qpsqlab.cli import main

if __name__ == "__main__":
    sys.exit(main(["protocol", *sys.argv[1:]]))
