import sys

from zetaroutes.cli import main

sys.exit(main())
