import sys

from galhull.cli import main

sys.exit(main())
