"""
Lattice propagators and continuous multinomials
"""
import logging
import os

from latticeprop.resources import constants as cns

__version__ = cns.VERSION

logging.basicConfig(
    level=os.getenv(cns.LOG_LEVEL_ENV, "INFO").upper(),
    format=cns.LOG_FORMAT,
    datefmt="%m/%d/%Y %I:%M:%S %p",
)
