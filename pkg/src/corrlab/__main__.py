"""Allow ``python -m corrlab``."""

import sys

from corrlab.cli import main

sys.exit(main())
