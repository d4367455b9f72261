"""
Configuration constants for Turannical.
"""

# Search budgets (nodes explored by branch-and-bound engines)
DEFAULT_BUDGET = 10**7

# Max k-cut is solved exactly up to this many vertices, local search above
EXACT_PARTITION_MAX_N = 24

# Below this probability, samplers skip geometrically through the index space
SPARSE_SAMPLING_THRESHOLD = 0.01

# Confidence level for Wilson and t intervals
CONFIDENCE_LEVEL = 0.95

# The exhaustive oracle enumerates 2**pairs graphs; C(7, 2) = 21
EXHAUSTIVE_MAX_PAIRS = 21

# Floats given as thresholds are snapped to rationals with this denominator cap
FRACTION_MAX_DENOMINATOR = 10**9

# Fixed-width count limit (numpy int64 accumulators)
INT64_MAX = 2**63 - 1

# Seeds are 64-bit
SEED_BITS = 64

# Curve CSV layout
CSV_COLUMNS = (
    "n",
    "p",
    "q",
    "property",
    "mode",
    "trials",
    "successes",
    "unknowns",
    "estimate",
    "ci_lo",
    "ci_hi",
)
CSV_FLOAT_FORMAT = "%.17g"

# Property kinds
PROPERTY_EXACT = "exact"
PROPERTY_EPS = "eps"
PROPERTY_EXACT_FOR_G = "exact-for-g"
PROPERTY_EPS_FOR_G = "eps-for-g"
PROPERTY_KINDS = (PROPERTY_EXACT, PROPERTY_EPS, PROPERTY_EXACT_FOR_G, PROPERTY_EPS_FOR_G)

# Decision modes
MODE_SOLVER = "solver"
MODE_FILTER = "filter"
DECISION_MODES = (MODE_SOLVER, MODE_FILTER)

# Process exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARAMETER = 2
EXIT_UNKNOWN = 3

# Sharpness probe levels
SHARPNESS_LOW = 0.1
SHARPNESS_HIGH = 0.9
