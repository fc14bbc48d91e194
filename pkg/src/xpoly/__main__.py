import sys

from xpoly.cli import main

sys.exit(main())
