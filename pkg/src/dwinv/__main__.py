import sys

from dwinv.cli import main

sys.exit(main())
