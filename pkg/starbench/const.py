"""Constants for starbench."""

DOMAIN = "starbench"

# Configuration keys
CONF_SEED = "seed"
CONF_THREADS = "threads"
CONF_BUDGET = "budget"
CONF_FORMAT = "format"
CONF_SAMPLES = "samples"

# Output formats
FORMAT_TEXT = "text"
FORMAT_JSON_LINES = "json-lines"
FORMATS = (FORMAT_TEXT, FORMAT_JSON_LINES)

# Defaults
DEFAULT_SEED = 1729
DEFAULT_THREADS = 1
DEFAULT_BUDGET = 600.0
DEFAULT_SAMPLES = 500
DEFAULT_FORMAT = FORMAT_TEXT

# Good-pair proof constants: threshold GOOD_PAIR_FACTOR * k, count 2k + GOOD_PAIR_COUNT_OFFSET
GOOD_PAIR_FACTOR = 3
GOOD_PAIR_COUNT_OFFSET = 6

# Instance caps (lifted with force=True / --force)
EXACT_F_MAX_N_K2 = 7
EXACT_F_MAX_N = 8
AR_MAX_N_S2 = 7
AR_LONG_RUN_N = 7

# Exhaustive limits
TUTTE_EXHAUSTIVE_MAX_N = 16
DEGREE_SEQUENCE_MAX_SUM = 40
ALL_GRAPHS_MAX_N = 7

# Search tuning
PROGRESS_EVERY_NODES = 100_000
SPLIT_DEPTH = 6

# Exit codes
EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
