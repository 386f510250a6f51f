"""Constants shared across the driven_qubit modules."""

WITNESS = "witness"
STEERING = "steering"
TARGETS = (WITNESS, STEERING)

MAXIMUM = "maximum"
MINIMUM = "minimum"

# Branch labels of stationary points in the chirp rate. D0 holds minima.
BRANCH_D0 = "D0"
BRANCH_D1 = "D1"
BRANCH_D2 = "D2"
BRANCH_D3 = "D3"
WITNESS_MAXIMUM_BRANCHES = (BRANCH_D1, BRANCH_D2, BRANCH_D3)

CSV = "csv"
JSON = "json"
EXPORT_FORMATS = (CSV, JSON)

# Classical upper bound of the temporal steering parameter.
CLASSICAL_STEERING_BOUND = 1.0

# Process exit codes of the command line.
EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_IO = 3
