import sys

from cliffcz.cli import main

sys.exit(main())
