import sys

from hardysums.cli import main

sys.exit(main())
