import sys

from parbridges.cli import main

sys.exit(main())
