"""`python -m flowgraphs` equivalent of the fg console script.

Handy in shells where `fg` means job control.
"""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
