"""Constants for graphon_lab"""

PACKAGE_NAME = "graphon_lab"
VERSION = "0.1.0"

DEFAULT_CONCURRENT_TASKS = 4

# Quadrature
DEGREE_QUADRATURE_ORDER = 16
STEP_QUADRATURE_ORDER = 8
RESISTANCE_QUADRATURE_SUBDIVISIONS = 4

# Tolerances
SYMMETRY_TOL = 1e-12
CLAMP_TOL = 1e-10
CONNECTIVITY_TOL = 1e-10
SEPARATION_TOL = 1e-3
OPERATOR_NORM_TOL = 1e-5
MONOTONE_TOL = 1e-12

# Resolutions
OPERATOR_NORM_MIN_RESOLUTION = 16
OPERATOR_NORM_RESOLUTION_CAP = 2048
NYSTROM_MIN_RESOLUTION = 64
NYSTROM_DEFAULT_RESOLUTION = 1024
NYSTROM_RESOLUTION_CAP = 4096
EXTREMA_GRID_STEP = 1e-3
REARRANGEMENT_RESOLUTION = 4096
CHECK_GRID_RESOLUTION = 128

# Experiments
DEFAULT_NU = 0.1
DEFAULT_TRIALS = 10
DEFAULT_MASTER_SEED = 0
DEFAULT_N_GRID = (16, 32, 64, 128, 256, 512, 1024)
MIN_SLOPE_POINTS = 4

CSV_COMMENT_PREFIX = "# graphon_lab"

GRAPHON_PRESETS: dict[str, dict] = {
    "bilinear_decay": {
        "name": "bilinear_decay",
        "family": "bilinear",
        "params": {"a": 0.8},
    },
    "constant": {
        "name": "constant",
        "family": "constant",
        "params": {"p": 0.5},
    },
    "two_block": {
        "name": "two_block",
        "family": "block",
        "params": {"values": [[0.9, 0.1], [0.1, 0.9]]},
        "breakpoints": [0.0, 0.5, 1.0],
    },
}
