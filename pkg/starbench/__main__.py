"""Entry point for ``python -m starbench``."""

import sys

from .cli import run

sys.exit(run())
