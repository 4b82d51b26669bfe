"""
File location; .../classical/lincode.py
Description: This file contains the packed GF(2) vectors and matrices and
            the binary linear codes built from them: cyclic codes, parity
            extension, the |u|u+v| construction, duals, containment,
            Reed-Muller codes and the Goethals-Preparata coset
            representatives.
(c) 2024 QGPCodes - all rights reserved
"""

# Global imports
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional
from . import logger

# Application imports
from classical.gf2poly import (
    FieldTable,
    Poly2,
    cyclic_modulus,
    cyclic_reduce,
    idempotent,
    poly_divides,
    poly_eval,
    poly_gcd,
)
from main.exceptions import ConstructionError

# Third-party imports
import galois
import numpy as np

GF2 = galois.GF(2)

# ------------------------------------------
# Packed vectors and matrices
# ------------------------------------------


@dataclass(frozen=True)
class BitVector:
    """
    Binary vector packed into an integer, coordinate i at bit i.
    Bits at or above `length` are always zero.
    """

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(
                f"Bits {self.bits:#x} do not fit into a vector of length {self.length}."
            )

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @classmethod
    def unit(cls, length: int, i: int) -> "BitVector":
        return cls(length, 1 << i)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        bits = 0
        for i in support:
            bits ^= 1 << i
        return cls(length, bits)

    @classmethod
    def from_array(cls, array) -> "BitVector":
        array = np.asarray(array, dtype=np.uint8) & 1
        packed = np.packbits(array, bitorder="little").tobytes()
        return cls(len(array), int.from_bytes(packed, "little"))

    @classmethod
    def from_hex(cls, length: int, text: str) -> "BitVector":
        return cls(length, int(text, 16))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def support(self) -> list[int]:
        return [i for i in range(self.length) if (self.bits >> i) & 1]

    def to_array(self) -> np.ndarray:
        nbytes = (self.length + 7) // 8
        raw = np.frombuffer(self.bits.to_bytes(nbytes, "little"), dtype=np.uint8)
        return np.unpackbits(raw, bitorder="little")[: self.length]

    def to_hex(self) -> str:
        width = max(1, (self.length + 3) // 4)
        return format(self.bits, f"0{width}x")

    def concat(self, other: "BitVector") -> "BitVector":
        """Juxtaposition (self; other)."""
        return BitVector(self.length + other.length, self.bits | (other.bits << self.length))

    def slice(self, start: int, stop: int) -> "BitVector":
        return BitVector(stop - start, (self.bits >> start) & ((1 << (stop - start)) - 1))

    def dot(self, other: "BitVector") -> int:
        return (self.bits & other.bits).bit_count() & 1

    def __getitem__(self, i: int) -> int:
        return (self.bits >> i) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError(f"Length mismatch: {self.length} != {other.length}.")
        return BitVector(self.length, self.bits ^ other.bits)

    __add__ = __xor__

    def __bool__(self) -> bool:
        return self.bits != 0


def pack_bits(array) -> np.ndarray:
    """
    Pack every row of a 0/1 matrix into an integer with column j at bit j.
    The result has dtype uint64 when the rows fit one word, object (Python
    integers) otherwise.
    """

    array = np.asarray(array, dtype=np.uint8)
    width = array.shape[1]
    if width <= 64:
        weights = np.left_shift(np.uint64(1), np.arange(width, dtype=np.uint64))
        return (array.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)
    return np.array(
        [int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little") for row in array],
        dtype=object,
    )


def gf2_rank(array) -> int:
    array = np.asarray(array, dtype=np.uint8)
    if array.size == 0 or not array.any():
        return 0
    return int(np.linalg.matrix_rank(GF2(array)))


def gf2_row_reduce(array) -> np.ndarray:
    """
    Return the nonzero rows of the reduced row echelon form.
    """

    array = np.asarray(array, dtype=np.uint8)
    if array.shape[0] == 0 or not array.any():
        return np.zeros((0, array.shape[1]), dtype=np.uint8)
    reduced = GF2(array).row_reduce().view(np.ndarray).astype(np.uint8)
    return reduced[reduced.any(axis=1)]


def gf2_null_space(array) -> np.ndarray:
    """
    Return a basis (as rows) of {x : array . x = 0}.
    """

    array = np.asarray(array, dtype=np.uint8)
    ncols = array.shape[1]
    if array.shape[0] == 0 or not array.any():
        return np.eye(ncols, dtype=np.uint8)
    if gf2_rank(array) == ncols:
        return np.zeros((0, ncols), dtype=np.uint8)
    return GF2(array).null_space().view(np.ndarray).astype(np.uint8)


def gf2_matmul(a, b) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    return ((a @ b) % 2).astype(np.uint8)


def pivot_columns(reduced: np.ndarray) -> list[int]:
    """Leading columns of the rows of a reduced row echelon form."""
    return [int(np.argmax(row)) for row in reduced]


def complement_basis(base, larger) -> np.ndarray:
    """
    Extend the reduced row echelon basis of `base` by rows of the reduced
    basis of `larger` and return the added rows, reduced against the
    running basis. span(base) + span(added) = span(base) + span(larger).
    """

    basis = [row.copy() for row in gf2_row_reduce(base)]
    pivots = pivot_columns(basis)
    added = []
    for row in gf2_row_reduce(larger):
        reduced = row.copy()
        for b, p in zip(basis, pivots):
            if reduced[p]:
                reduced ^= b
        if not reduced.any():
            continue
        p = int(np.argmax(reduced))
        # Keep every pivot confined to its own row
        for b in basis:
            if b[p]:
                b ^= reduced
        basis.append(reduced.copy())
        pivots.append(p)
        added.append(reduced)
    ncols = np.asarray(larger).shape[1]
    return np.array(added, dtype=np.uint8).reshape(len(added), ncols)


@dataclass(frozen=True, eq=False)
class BitMatrix:
    """
    Binary matrix stored as a 0/1 uint8 array of shape (rows, ncols).
    """

    ncols: int
    array: np.ndarray

    def __post_init__(self):
        if self.array.ndim != 2 or self.array.shape[1] != self.ncols:
            raise ValueError(f"Expected a matrix with {self.ncols} columns.")

    @classmethod
    def from_array(cls, array) -> "BitMatrix":
        array = np.asarray(array, dtype=np.uint8) & 1
        return cls(array.shape[1], array)

    @classmethod
    def from_rows(cls, rows: Iterable[BitVector], ncols: int) -> "BitMatrix":
        rows = list(rows)
        if any(row.length != ncols for row in rows):
            raise ValueError(f"All rows must have length {ncols}.")
        if not rows:
            return cls(ncols, np.zeros((0, ncols), dtype=np.uint8))
        return cls(ncols, np.array([row.to_array() for row in rows], dtype=np.uint8))

    @property
    def nrows(self) -> int:
        return self.array.shape[0]

    @property
    def rows(self) -> list[BitVector]:
        return [BitVector.from_array(row) for row in self.array]

    @cached_property
    def packed(self) -> list[int]:
        return [row.bits for row in self.rows]

    @cached_property
    def rank(self) -> int:
        return gf2_rank(self.array)

    def row_reduce(self) -> "BitMatrix":
        return BitMatrix(self.ncols, gf2_row_reduce(self.array))

    def null_space(self) -> "BitMatrix":
        return BitMatrix(self.ncols, gf2_null_space(self.array))

    def stack(self, other: "BitMatrix") -> "BitMatrix":
        return BitMatrix(self.ncols, np.vstack([self.array, other.array]))

    def combine(self, coefficients) -> BitVector:
        """Return the sum of the rows selected by a 0/1 coefficient vector."""
        coefficients = np.asarray(coefficients, dtype=np.int64)
        return BitVector.from_array((coefficients @ self.array.astype(np.int64)) % 2)


# ------------------------------------------
# Linear codes
# ------------------------------------------


@dataclass(frozen=True, eq=False)
class LinearCode:
    """
    Binary linear [n, k] code with a full-rank generator matrix and its
    parity-check matrix in reduced row echelon form.
    """

    n: int
    k: int
    generator: BitMatrix
    parity_check: BitMatrix
    label: str = ""

    @classmethod
    def from_generator(cls, rows, label: str = "") -> "LinearCode":
        """
        Build a code from generator rows. Linearly dependent rows are
        replaced by the reduced row echelon basis of their span.

        Parameters:
        rows (array-like or BitMatrix): Generator rows.
        label (str): Name of the code.

        Returns:
        code (LinearCode): The code with its parity-check matrix.

        Raises:
        ConstructionError: If G H^T != 0 or a rank condition fails.
        """

        G = rows.array if isinstance(rows, BitMatrix) else np.asarray(rows, dtype=np.uint8)
        n = G.shape[1]
        k = gf2_rank(G)
        if k != G.shape[0]:
            G = gf2_row_reduce(G)
        H = gf2_row_reduce(gf2_null_space(G))

        if G.shape[0] and H.shape[0] and gf2_matmul(G, H.T).any():
            raise ConstructionError(f"Generator and parity check of {label or 'code'} are not orthogonal.")
        if gf2_rank(H) != n - k:
            raise ConstructionError(f"Parity check of {label or 'code'} does not have rank {n - k}.")
        return cls(
            n=n,
            k=k,
            generator=BitMatrix(n, G.astype(np.uint8)),
            parity_check=BitMatrix(n, H),
            label=label,
        )

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    def syndrome(self, v: BitVector) -> int:
        """
        Packed syndrome H v^T, check row j at bit j.
        """

        if v.length != self.n:
            raise ConstructionError(f"Vector of length {v.length} does not fit a code of length {self.n}.")
        s = 0
        for j, row in enumerate(self.parity_check.packed):
            s |= ((row & v.bits).bit_count() & 1) << j
        return s

    def column_syndromes(self) -> np.ndarray:
        """
        Packed syndrome of every unit vector, one entry per coordinate.
        """

        return pack_bits(self.parity_check.array.T)

    def contains_vector(self, v: BitVector) -> bool:
        return self.syndrome(v) == 0

    def encode(self, message) -> BitVector:
        return self.generator.combine(message)

    def random_codeword(self, rng: np.random.Generator) -> BitVector:
        return self.encode(rng.integers(0, 2, size=self.k))

    def __str__(self) -> str:
        return f"{self.label or 'code'} [{self.n},{self.k}]"


def span_code(rows: Iterable[BitVector], n: int, label: str = "") -> LinearCode:
    """
    Return the code spanned by arbitrary (possibly dependent) rows.
    """

    return LinearCode.from_generator(BitMatrix.from_rows(rows, n), label=label)


def cyclic_code(n: int, g: Poly2, label: str = "") -> LinearCode:
    """
    Cyclic code of length n generated by g. The generator rows are the
    shifts z^i g(z), i = 0 .. n - deg(g) - 1, and coordinate i of a
    codeword is the coefficient of z^i.

    Raises:
    ConstructionError: If g does not divide z^n + 1.
    """

    if not g or not poly_divides(g, cyclic_modulus(n)):
        raise ConstructionError(f"{g} does not divide z^{n} + 1.")
    k = n - int(g.degree)
    rows = [BitVector(n, g.value << i) for i in range(k)]
    code = LinearCode.from_generator(BitMatrix.from_rows(rows, n), label=label)
    logger.debug(f"Cyclic code {code} generated by {g}")
    return code


def ideal_code(n: int, p: Poly2, label: str = "") -> LinearCode:
    """
    Cyclic code generated by an arbitrary polynomial p, i.e. the ideal
    (p) of GF(2)[z]/(z^n - 1), whose generator polynomial is
    gcd(p, z^n + 1).
    """

    g = poly_gcd(cyclic_reduce(p, n), cyclic_modulus(n))
    return cyclic_code(n, g, label=label)


def extend_parity(C: LinearCode, label: str = "") -> LinearCode:
    """
    Append an overall parity bit f(1) to every codeword.
    """

    G = C.generator.array
    parity = G.sum(axis=1, dtype=np.int64) % 2
    extended = np.hstack([G, parity[:, None].astype(np.uint8)])
    return LinearCode.from_generator(extended, label=label or f"extended {C.label}".strip())


def u_u_plus_v(A: LinearCode, B: LinearCode, label: str = "") -> LinearCode:
    """
    The |u|u+v| construction {(u, u + v) : u in A, v in B} with generator
    [[G_A | G_A], [0 | G_B]].

    Raises:
    ConstructionError: If the lengths differ.
    """

    if A.n != B.n:
        raise ConstructionError(f"|u|u+v| needs equal lengths, got {A.n} and {B.n}.")
    GA, GB = A.generator.array, B.generator.array
    top = np.hstack([GA, GA])
    bottom = np.hstack([np.zeros_like(GB), GB])
    code = LinearCode.from_generator(np.vstack([top, bottom]), label=label)
    if code.k != A.k + B.k:
        raise ConstructionError(f"|u|u+v| dimension {code.k} differs from {A.k} + {B.k}.")
    return code


def dual(C: LinearCode, label: str = "") -> LinearCode:
    """
    Euclidean dual code, generated by the parity-check matrix of C.
    """

    return LinearCode.from_generator(C.parity_check, label=label or f"dual {C.label}".strip())


def contains(A: LinearCode, B: LinearCode) -> bool:
    """
    Return True if B is a subcode of A, decided by
    rank(G_A) == rank(G_A stacked on G_B).
    """

    if A.n != B.n:
        raise ConstructionError(f"Containment needs equal lengths, got {A.n} and {B.n}.")
    return gf2_rank(np.vstack([A.generator.array, B.generator.array])) == A.k


def reed_muller(r: int, m: int) -> LinearCode:
    """
    Reed-Muller code RM(r, m): evaluation vectors of all monomials of
    degree <= r in m boolean variables. Coordinate j holds the assignment
    whose variable i is bit i of j.
    """

    if not 0 <= r <= m:
        raise ConstructionError(f"RM({r},{m}) needs 0 <= r <= m.")
    points = np.arange(2**m)
    variables = [((points >> i) & 1).astype(np.uint8) for i in range(m)]
    rows = []
    for degree in range(r + 1):
        for monomial in combinations(range(m), degree):
            row = np.ones(2**m, dtype=np.uint8)
            for i in monomial:
                row &= variables[i]
            rows.append(row)
    return LinearCode.from_generator(np.array(rows), label=f"RM({r},{m})")


def coset_reps_gp(F: FieldTable, m: int, theta1: Optional[Poly2] = None) -> list[BitVector]:
    """
    Coset representatives of the Goethals and Preparata codes.
    For i = 0 .. n-1 the representative is (z^i; 1; z^i theta_1(z); 0),
    each half being the n coefficients followed by the extension bit.
    The last representative is the zero vector.

    Parameters:
    F (FieldTable): GF(2^(m-1)).
    m (int): Even parameter, at least 6.
    theta1 (Poly2): The idempotent theta_1, computed if omitted.

    Returns:
    reps (list of BitVector): 2^(m-1) vectors of length 2^m.

    Raises:
    ConstructionError: If the field does not match m or theta_1(1) != 0.
    """

    if F.w != m - 1:
        raise ConstructionError(f"GF(2^{F.w}) does not match m={m}.")
    n = F.n
    if theta1 is None:
        theta1 = idempotent(F, 1)
    # The appended 0 of the second half must equal f(1) for f = z^i theta_1
    if poly_eval(F, theta1, 1) != 0:
        raise ConstructionError("theta_1(1) != 0, the second extension bit would not be a parity bit.")

    reps = []
    for i in range(n):
        left = BitVector(n + 1, (1 << i) | (1 << n))
        shifted = cyclic_reduce(Poly2(theta1.value << i), n)
        if shifted.weight % 2:
            raise ConstructionError(f"z^{i} theta_1(z) has odd weight.")
        right = BitVector(n + 1, shifted.value)
        reps.append(left.concat(right))
    reps.append(BitVector.zeros(2 * (n + 1)))
    return reps
