import sys

from hadring.cli import main

sys.exit(main())
