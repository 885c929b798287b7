"""Constants for the AIII Steinberg orbit engine."""

# PACKAGE ATTRIBUTES
DOMAIN = "aiii_steinberg"
NAME = "AIII double flag orbits and Steinberg maps"

# ENVIRONMENT
ENV_BOUND = "AIII_STEINBERG_BOUND"
ENV_TRIALS = "AIII_STEINBERG_TRIALS"

# CONF
CONF_COMMAND = "command"
CONF_P = "p"
CONF_Q = "q"
CONF_R = "r"
CONF_OMEGA = "omega"
CONF_LAMBDA = "lambda"
CONF_MU = "mu"
CONF_MATRIX = "matrix"
CONF_SEED = "seed"
CONF_BOUND = "bound"
CONF_TRIALS = "trials"
CONF_FORMAT = "format"
CONF_OUTPUT = "output"
CONF_DOT = "dot"
CONF_VERBOSE = "verbose"
CONF_RANDOM_SAMPLES = "random_samples"

# COMMANDS
COMMAND_ENUMERATE = "enumerate"
COMMAND_REPORT = "report"
COMMAND_HASSE = "hasse"
COMMAND_FIBER = "fiber"
COMMAND_COUNT = "count"
COMMAND_CLASSIFY = "classify"
COMMAND_VERIFY = "verify"
COMMAND_GRASSMANN = "grassmann"

# DEFAULTS
DEFAULT_BOUND = 99
DEFAULT_TRIALS = 3
DEFAULT_RETRY_CAP = 3
DEFAULT_SEED = 0
DEFAULT_POWER_CHECK_DEPTH = 3
DEFAULT_RANDOM_SAMPLES = 0

# SIZE BOUNDS
MAX_ENUMERATION_SIZE = 6
MAX_TABLEAU_SIZE = 12
MAX_CROSS_CHECK_NODES = 500

# EXIT CODES
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INVALID = 3

# OUTPUT FORMATS
FORMAT_TEXT = "text"
FORMAT_JSON = "json"
FORMAT_DOT = "dot"

# SIGNS
PLUS = "+"
MINUS = "-"

# STARTUP LOG MESSAGE
STARTUP_MESSAGE = f"""
-------------------------------------------------------------------
{NAME}
Exact combinatorics for K-orbits of Gr(p+q, r) x Fl(p) x Fl(q).
Orbits, closure order, Steinberg maps and the gRS bijection.
-------------------------------------------------------------------
"""
