# ruff: noqa: TID252
"""Run the command line interface with python -m neuralhss."""

import sys

from .cli.main import main

sys.exit(main())
