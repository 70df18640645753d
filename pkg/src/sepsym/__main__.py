import sys

from sepsym.cli import main

sys.exit(main())
