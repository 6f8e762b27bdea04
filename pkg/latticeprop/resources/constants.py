"""
Constants
"""
from .space_names import space_map

VERSION = "0.1.0"
MAX_WORKERS = 10
THREADS_ENV = "LATTICEPROP_THREADS"
LOG_LEVEL_ENV = "LATTICEPROP_LOG_LEVEL"
SPACE_MAP = space_map
LOG_FORMAT = """{
    "time": "%(asctime)s",
    "lineno": "%(lineno)d",
    "name": "[%(name)s]",
    "loglevel": "%(levelname)s",
    "process": "%(process)s",
    "filename": "%(filename)s",
    "funcName": "%(funcName)s",
    "logmessage": "%(message)s",
}"""

### PATHS
# largest Δt the literal path enumerator accepts, keyed by spatial dimension
ENUMERATION_CAP = {1: 12, 2: 8}
ENUMERATION_CAP_HIGH_D = 8

### PROPAGATORS
KN_MAX_ORDER = 50
DEFAULT_MASS = 1.0
# a later Cauchy value above this multiple of the earlier one is a trend inversion
CAUCHY_TREND_SLACK = 1.1

### CONTINUOUS MULTINOMIAL
SERIES_TOL = 1e-12
SERIES_MAX_DEGREE = 200
TAYLOR_MAX_DEGREE = 120
QUAD_TOL = 1e-6
QUAD_MIN_POINTS = 64
QUAD_MAX_POINTS = 2**14
HIGHD_MIN_POINTS = 16
HIGHD_MAX_POINTS = 256
PEAK_SEARCH_CELLS = 16

### INTERACTIONS
POTENTIAL_BUCKETS_PER_UNIT = 8
MAX_POTENTIAL_BUCKETS = 200_000
INTERACTING_MAX_STEPS = 4096

### OUTPUT
CSV_SIGNIFICANT_DIGITS = 12
OUTPUT_FORMATS = ["csv", "json", "svg"]
SVG_HASH_SALT = "latticeprop"
