import sys

from pygridcycles.cli import main

sys.exit(main())
