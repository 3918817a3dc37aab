import sys

from gaspin.cli import main

sys.exit(main())
