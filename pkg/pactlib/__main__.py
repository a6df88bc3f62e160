import sys

from pactlib.edge import main

sys.exit(main())
