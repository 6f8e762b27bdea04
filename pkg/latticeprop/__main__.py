"""
python -m latticeprop
"""
import sys

from latticeprop.cli import main

sys.exit(main())
