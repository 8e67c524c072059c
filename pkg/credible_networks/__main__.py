"""Allow `python -m credible_networks`."""

import sys

from credible_networks.cli.app import main

sys.exit(main())
