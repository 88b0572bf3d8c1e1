#!/usr/bin/env python3
"""Run the full verification battery with the default scenario.

Any extra arguments are forwarded to the CLI, so e.g.

    python scripts/run_verification.py --samples 20 --format json

runs a quicker pass.  Exit code mirrors the suite verdict.
"""

import sys

from hktlab.cli import main

if __name__ == "__main__":
    sys.exit(main(["all"] + sys.argv[1:]))
