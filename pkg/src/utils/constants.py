"""
This module defines static messages, format tokens and configuration constants
used across the stick-graph recognizer. These constants include CLI strings,
exit codes, wire-format tokens, validation messages and rendering defaults.
"""

# === Application ===

APP_NAME = "stick-recognizer"
APP_VERSION = "1.0.0"
APP_DESCRIPTION = (
    "Decide Stick representability of bipartite graphs, construct "
    "representations on a slope -1 ground line and cross-check them."
)

# === Exit Codes ===

EXIT_YES = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3
EXIT_BOUND_EXCEEDED = 4

# === Wire Format Tokens ===

SIDE_A_PREFIX = "a"
SIDE_B_PREFIX = "b"
LIST_SEPARATOR = ","
COMMENT_PREFIX = "#"
EDGE_LIST_HEADER = "edges"
DIMACS_COMMENT_PREFIX = "c"
DIMACS_HEADER_PREFIX = "p cnf"

# === Methods & Formats ===

METHOD_AUTO = "auto"
METHOD_BRUTE = "brute"
METHOD_SAT3 = "sat3"
RECOGNIZE_METHODS = (METHOD_AUTO, METHOD_BRUTE, METHOD_SAT3)

FORMAT_SVG = "svg"
FORMAT_ASCII = "ascii"
RENDER_FORMATS = (FORMAT_SVG, FORMAT_ASCII)

EMIT_SIGMA = "sigma"
EMIT_CYCLE = "cycle"
EMIT_PATTERN = "pattern"
EMIT_DIMACS = "dimacs"
EMIT_CERTIFICATE = "certificate"

# === Rendering Defaults ===

SVG_UNIT = 20
SVG_MARGIN = 1
SVG_STROKE_A = "#1f77b4"
SVG_STROKE_B = "#d62728"
SVG_STROKE_GROUND = "#7f7f7f"
SVG_FONT_SIZE = 10
ASCII_HORIZONTAL = "-"
ASCII_VERTICAL = "|"
ASCII_CROSSING = "+"
ASCII_EMPTY = " "

# === Status Messages (stderr) ===

MSG_STATUS_YES = "yes"
MSG_STATUS_NO = "no"
MSG_STATUS_UNKNOWN = "unknown"
MSG_STATUS_LINE = "{command}: {verdict}{details}"
MSG_NONE = "none"
MSG_VALID = "valid"
MSG_INVALID = "invalid"
MSG_WITNESS_EDGE = "edge {a}-{b} has {b} before {a}"
MSG_WITNESS_NON_EDGE = "non-edge {a}-{b} would be crossed"
MSG_INTERRUPTED_BY_USER = "(Interrupted by user)"

# === Certificate & Provenance Texts ===

CERT_K44_MINUS_PM = "k44-minus-pm"
CERT_EXHAUSTIVE = "exhaustive-search"
CERT_SAT3_UNSAT = "3sat-unsatisfiable"
CERT_2SAT_UNSAT = "2sat-unsatisfiable"
CERT_FIXED_A_OBSTRUCTION = "fixed-a-obstruction"

VIA_SC1P = "sc1p-construction"
VIA_SMALL_A = "small-a-construction"
VIA_PATTERN_FREE = "pattern-free-orders"
VIA_ONE_SIDED = "one-sided-construction"
VIA_SAT3 = "3sat"
VIA_BRUTE = "brute-force"
VIA_2SAT = "2sat"
VIA_FALLBACK_BRUTE = "fallback-brute-force"
VIA_FALLBACK_SAT = "fallback-transitive-sat"

# === Error Handling Messages ===

ERR_ARG_COUNT_ERROR = "You must provide {expected} non-empty argument{plural}{details}."
ERR_TYPE_ERROR = "Expected type '{expected}', but received type '{actual}'."
ERR_UNEXPECTED = "Unexpected internal error: {error}"

ERR_NEGATIVE_DIMENSION = "Graph dimensions must be non-negative, got {n_a}x{n_b}."
ERR_MATRIX_SHAPE = "Matrix must have {expected} rows of {cols} entries, got {detail}."
ERR_MATRIX_ENTRY = (
    "Matrix entry at row {row}, column {col} must be 0 or 1, got {value!r}."
)
ERR_ORDERING_NOT_PERMUTATION = "Ordering {perm} is not a permutation of 1..{size}."
ERR_DIMENSION_MISMATCH = "{what} has shape {actual}, expected {expected}."
ERR_VERTEX_OUT_OF_RANGE = "Vertex '{vertex}' is out of range for a {n_a}x{n_b} graph."
ERR_VERTEX_DUPLICATE = "Vertex '{vertex}' appears more than once in the sequence."
ERR_VERTEX_MISSING = "Sequence misses vertices: {vertices}."
ERR_NEGATIVE_LENGTH = "Segment lengths must be non-negative."
ERR_BOUND_EXCEEDED = "{operation}: instance size {size} exceeds the bound {bound}."
ERR_DENSITY_RANGE = "Density must lie in [0, 1], got {density}."
ERR_UNKNOWN_FAMILY = "Unknown family '{name}'. Known families: {known}."
ERR_FAMILY_PARAMS = "Family '{name}' expects parameters ({expected}), got {actual}."
ERR_FAMILY_VALUE = "Family '{name}': {detail}."
ERR_CLAUSE_TOO_WIDE = "Clause {clause} has width {width}; 2-SAT accepts width at most 2."
ERR_ZERO_LITERAL = "Literal 0 is not allowed in a clause."
ERR_DIMACS_SYNTAX = "Invalid DIMACS line {lineno}: '{line}'."
ERR_NOT_A_CYCLE = (
    "Step {source} -> {target} of the cycle is not an edge of the constraint digraph."
)
ERR_CYCLE_NO_B = "Cycle {cycle} contains no B-vertex."
ERR_CYCLE_SHAPE = "Cycle {cycle} does not follow a C2 edge with an A-run and a C1 edge."
ERR_NOT_SC1P = "Rows and columns in the given orders do not have consecutive ones."
ERR_SMALL_A_TOO_LARGE = "Category construction needs at most 3 A-vertices, got {n_a}."
ERR_UNKNOWN_METHOD = "Unknown method '{method}'. Use one of: {known}."
ERR_UNKNOWN_FORMAT = "Unknown format '{fmt}'. Use one of: {known}."
ERR_CONSTRUCTION_DEFECT = "{construction} produced an invalid sequence {sigma}: {detail}."
ERR_NO_SC1P_ARRANGEMENT = (
    "No consecutive-ones arrangement admits a separating ground line."
)
ERR_TOTALITY = "Assignment does not induce a total order: {u} and {v} disagree."
ERR_DISCREPANCY = (
    "2-SAT reported satisfiable for sigma_A={order} but exhaustive search "
    "found no valid sigma_B."
)
ERR_SMALL_A_REJECTED = "Category order {order} was rejected for sigma_A={sigma_a}."

# === Parser Messages ===

ERR_PARSE_EMPTY = "Graph text is empty."
ERR_PARSE_HEADER = "Invalid header '{line}'. Expected 'n m' or 'edges n m'."
ERR_PARSE_ROW = (
    "Invalid matrix row '{line}' (line {lineno}). "
    "Expected {cols} characters from {{0,1}}."
)
ERR_PARSE_ROW_COUNT = "Expected {expected} matrix rows, got {actual}."
ERR_PARSE_EDGE = (
    "Invalid edge '{line}' (line {lineno}). "
    "Expected 'i j' with 1 <= i <= {n_a} and 1 <= j <= {n_b}."
)
ERR_PARSE_VERTEX_TOKEN = "Invalid vertex token '{token}'. Expected a<i> or b<j>."
ERR_PARSE_ORDER_TOKEN = "Invalid ordering entry '{token}'. Expected a positive integer."
ERR_PARSE_EMPTY_LIST = "Expected a non-empty comma-separated list."
ERR_MISSING_OPTION = "Option {option} is required for {mode}."
ERR_PARSE_NUMBER = "Invalid number '{token}'."

# === Command-Line Help ===

HELP_GRAPH = "graph file: 'n m' header and 0/1 rows, or 'edges n m' and 1-based pairs"
HELP_ORDER_A = "ordering of A as comma-separated 1-based indices"
HELP_ORDER_B = "ordering of B as comma-separated 1-based indices"
HELP_SIGMA = "ground sequence as comma-separated a<i>/b<j> tokens"
HELP_EMIT = "what to write to stdout"
HELP_JOBS = "worker processes for exhaustive searches"
HELP_SOLVE_AB = "decide representability with both side orders fixed"
HELP_SOLVE_A = "decide representability with the order of A fixed"
HELP_RECOGNIZE = "decide representability with no order fixed"
HELP_PATTERNS = "search for forbidden submatrices"
HELP_VERIFY = "check a ground sequence combinatorially and geometrically"
HELP_GEN = "generate a graph file"
HELP_RENDER = "draw the canonical representation of a ground sequence"
