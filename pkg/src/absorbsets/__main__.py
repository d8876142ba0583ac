import sys

from absorbsets.cli import main

sys.exit(main())
