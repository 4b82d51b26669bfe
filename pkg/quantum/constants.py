# quantum/constants.py

# Constants related to the quantum codes

# Pauli matrices, GF(4) elements and binary (x, z) pairs.
# Columns: symbol, GF(4) element, x bit, z bit.
PauliGf4Map = [
    ("I", "0", 0, 0),
    ("X", "1", 1, 0),
    ("Y", "w^2", 1, 1),
    ("Z", "w", 0, 1),
]

# Nonidentity symbols per position in symplectic searches: X, Z and Y.
PauliAlphabet = 3

# Irreducible polynomials p of degree dim with p(1) = 1. Their companion
# matrices are fixed-point free. Bit i is the coefficient of z^i.
FixedPointFreePolynomials = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}

# Limits of the dense state-vector oracle.
OracleMaxQubits = 6
KnillLaflammeMaxQubits = 5
OracleTolerance = 1e-9

# Largest dimension enumerated by the exhaustive oracles.
BruteMaxDimension = 24
