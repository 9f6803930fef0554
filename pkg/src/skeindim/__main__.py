"""Allow ``python -m skeindim``."""

import sys

from .cli import main

sys.exit(main())
