import sys

from boundedlang.cli import main

sys.exit(main())
