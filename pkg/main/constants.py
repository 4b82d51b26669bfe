# main/constants.py
# Define all the constants shared by the commands and the apps here.

# Exit codes of the management commands (stable contract).
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_IO = 4

# Version of the JSON manifest layout written by `construct`.
MANIFEST_SCHEMA = 1

# Code families understood by `construct`, `verify` and `export`.
FAMILIES = ["goethals", "preparata", "stabilizer", "gp-quantum"]

# Values of the comparison columns of the parameter table. They are cited,
# never constructed: log2 dimension of the Goethals-based union codes and
# k of the enlarged extended BCH codes [[2^m, k, 8]].
CITED_GOETHALS_LOG2_DIM = {6: 30, 8: 210, 10: 966}
CITED_ENLARGED_BCH_K = {6: 32, 8: 214, 10: 972}
