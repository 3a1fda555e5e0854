#!/usr/bin/env python3
"""
Riordan Kit - Command Line Entry
================================

    python main.py matrix --g "1/(1-x)" --f "x/(1-x)" --rows 5
    python main.py family --r 1 --s 0 --t 1
    python main.py cross-validate --r 1 --s 1 --t 0
"""

import sys

from riordan.cli import run


if __name__ == "__main__":
    sys.exit(run())
