#!/usr/bin/env python3
"""RMS learning curves over oracle noise level and query budget.

Same as `qpsqlab learn`.  The default configuration (5 haar channels,
budgets up to 2e4, three test distributions) takes about half a minute;
`--n 6` is supported but markedly slower, see the README.
"""

import sys

from qpsqlab.cli import main

if __name__ == "__main__":
    sys.exit(main(["learn", *sys.argv[1:]]))
