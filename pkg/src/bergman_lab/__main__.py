"""python -m bergman_lab entry point."""

import sys

from .cli import main

sys.exit(main())
