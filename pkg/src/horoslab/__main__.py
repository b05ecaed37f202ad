import sys

from horoslab.cli import main

sys.exit(main())
