import sys

from deformosc.cli import main

sys.exit(main())
