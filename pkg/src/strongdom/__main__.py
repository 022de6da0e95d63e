import sys

from strongdom.cli import main

sys.exit(main())
