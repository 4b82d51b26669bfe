"""
File location; .../quantum/symplectic.py
Description: This file contains the binary symplectic representation of
            n-qubit Pauli operators (phases dropped), the symplectic inner
            product and weight, and additive symplectic codes with their
            duals and bounded minimum-weight search.
(c) 2024 QGPCodes - all rights reserved
"""

# Global imports
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Union
from . import logger

# Application imports
from classical.distsearch import SearchOutcome, Searcher
from classical.lincode import (
    BitMatrix,
    BitVector,
    gf2_matmul,
    gf2_null_space,
    gf2_rank,
    gf2_row_reduce,
    pack_bits,
)
from main.exceptions import BudgetError, ConstructionError
from quantum.constants import BruteMaxDimension, PauliAlphabet, PauliGf4Map

# Third-party imports
import numpy as np

# Symbol code x + 2 z to the Pauli letter and the GF(4) element
SYMBOLS = {x | (z << 1): (letter, element) for letter, element, x, z in PauliGf4Map}
CODES = {letter: code for code, (letter, _) in SYMBOLS.items()}

# ------------------------------------------
# Symplectic vectors
# ------------------------------------------


@dataclass(frozen=True)
class SympVector:
    """
    Pauli operator g = (g^X | g^Z) on n qubits, up to phase.
    """

    n: int
    x: BitVector
    z: BitVector

    def __post_init__(self):
        if self.x.length != self.n or self.z.length != self.n:
            raise ConstructionError(f"Both halves of a symplectic vector need length {self.n}.")

    @classmethod
    def zeros(cls, n: int) -> "SympVector":
        return cls(n, BitVector.zeros(n), BitVector.zeros(n))

    @classmethod
    def from_vector(cls, v: BitVector) -> "SympVector":
        """Split a length-2n vector in (x | z) layout."""
        n = v.length // 2
        return cls(n, v.slice(0, n), v.slice(n, 2 * n))

    @classmethod
    def from_symbols(cls, text: str) -> "SympVector":
        """Parse a Pauli string such as 'XZZXI'."""
        n = len(text)
        x = BitVector.from_support(n, [i for i, c in enumerate(text) if CODES[c] & 1])
        z = BitVector.from_support(n, [i for i, c in enumerate(text) if CODES[c] & 2])
        return cls(n, x, z)

    @classmethod
    def from_dict(cls, n: int, data: dict) -> "SympVector":
        return cls(n, BitVector.from_hex(n, data["x"]), BitVector.from_hex(n, data["z"]))

    def to_vector(self) -> BitVector:
        return self.x.concat(self.z)

    def to_dict(self) -> dict:
        return {"x": self.x.to_hex(), "z": self.z.to_hex()}

    @property
    def weight(self) -> int:
        return symp_weight(self)

    def __xor__(self, other: "SympVector") -> "SympVector":
        if self.n != other.n:
            raise ConstructionError(f"Qubit counts differ: {self.n} != {other.n}.")
        return SympVector(self.n, self.x ^ other.x, self.z ^ other.z)

    __add__ = __xor__

    def __bool__(self) -> bool:
        return bool(self.x) or bool(self.z)

    def __str__(self) -> str:
        return gf4_symbols(self)


def symp_inner(u: SympVector, v: SympVector) -> int:
    """
    Symplectic inner product u.x . v.z + u.z . v.x mod 2. It vanishes iff
    the two operators commute.
    """

    if u.n != v.n:
        raise ConstructionError(f"Qubit counts differ: {u.n} != {v.n}.")
    return ((u.x.bits & v.z.bits).bit_count() + (u.z.bits & v.x.bits).bit_count()) & 1


def symp_weight(v: SympVector) -> int:
    """Number of qubits on which v acts nontrivially."""
    return (v.x.bits | v.z.bits).bit_count()


def symp_weight_half_sum(v: SympVector) -> int:
    """(wgt(g^X) + wgt(g^Z) + wgt(g^X + g^Z)) / 2."""
    return (v.x.weight + v.z.weight + (v.x ^ v.z).weight) // 2


def gf4_symbols(v: SympVector, elements: bool = False) -> str:
    """Pauli letters per qubit, or space separated GF(4) elements."""
    codes = [v.x[i] | (v.z[i] << 1) for i in range(v.n)]
    if elements:
        return " ".join(SYMBOLS[code][1] for code in codes)
    return "".join(SYMBOLS[code][0] for code in codes)


def as_symp(row: Union[SympVector, BitVector, np.ndarray]) -> np.ndarray:
    if isinstance(row, SympVector):
        return row.to_vector().to_array()
    if isinstance(row, BitVector):
        return row.to_array()
    return np.asarray(row, dtype=np.uint8)


# ------------------------------------------
# Additive codes
# ------------------------------------------


@dataclass(frozen=True, eq=False)
class AdditiveSympCode:
    """
    Additive code over GF(4) in binary symplectic form: the GF(2) span of
    independent generator rows of length 2n in (x | z) layout.
    """

    n: int
    generators: BitMatrix
    label: str = ""

    @classmethod
    def from_rows(cls, n: int, rows: Iterable, label: str = "") -> "AdditiveSympCode":
        """
        Build a code from arbitrary rows. Dependent rows are replaced by a
        reduced row echelon basis of their span.
        """

        arrays = [as_symp(row) for row in rows]
        G = np.array(arrays, dtype=np.uint8).reshape(len(arrays), 2 * n)
        if gf2_rank(G) != G.shape[0]:
            G = gf2_row_reduce(G)
        return cls(n=n, generators=BitMatrix(2 * n, G), label=label)

    @property
    def rank(self) -> int:
        return self.generators.nrows

    @cached_property
    def vectors(self) -> list[SympVector]:
        return [SympVector.from_vector(row) for row in self.generators.rows]

    @cached_property
    def check_matrix(self) -> np.ndarray:
        """Euclidean parity check of the code over its 2n coordinates."""
        return gf2_row_reduce(gf2_null_space(self.generators.array))

    @cached_property
    def _check_rows(self) -> list[int]:
        return [BitVector.from_array(row).bits for row in self.check_matrix]

    def check_syndrome(self, v: SympVector) -> int:
        """Packed Euclidean syndrome; zero iff v is in the code."""
        bits = v.to_vector().bits
        s = 0
        for j, row in enumerate(self._check_rows):
            s |= ((row & bits).bit_count() & 1) << j
        return s

    def symp_syndrome(self, v: SympVector) -> int:
        """
        Commutation pattern of v with the generators, generator j at bit j.
        Two vectors share it iff they lie in the same coset of the
        symplectic dual.
        """

        s = 0
        for j, g in enumerate(self.vectors):
            s |= symp_inner(g, v) << j
        return s

    def contains(self, v: SympVector) -> bool:
        if v.n != self.n:
            raise ConstructionError(f"Vector on {v.n} qubits does not fit a code on {self.n}.")
        return self.check_syndrome(v) == 0

    def contains_code(self, other: "AdditiveSympCode") -> bool:
        if other.rank == 0:
            return True
        return gf2_rank(np.vstack([self.generators.array, other.generators.array])) == self.rank

    def elements(self) -> list[SympVector]:
        """
        All 2^rank elements, generated by doubling.

        Raises:
        BudgetError: If the rank exceeds the exhaustive limit.
        """

        if self.rank > BruteMaxDimension:
            raise BudgetError(f"Enumerating 2^{self.rank} elements exceeds the limit 2^{BruteMaxDimension}.")
        values = [0]
        for row in self.generators.rows:
            values += [value ^ row.bits for value in values]
        return [SympVector.from_vector(BitVector(2 * self.n, value)) for value in values]

    def __str__(self) -> str:
        return f"{self.label or 'code'} ({self.n} qubits, rank {self.rank})"


def symplectic_dual(C: AdditiveSympCode, label: str = "") -> AdditiveSympCode:
    """
    All w with symp_inner(w, g) = 0 for every generator g: the Euclidean
    kernel of the generator matrix with its halves swapped.
    """

    n = C.n
    G = C.generators.array
    swapped = np.hstack([G[:, n:], G[:, :n]])
    basis = gf2_row_reduce(gf2_null_space(swapped))
    dual_code = AdditiveSympCode(n=n, generators=BitMatrix(2 * n, basis), label=label)
    if dual_code.rank != 2 * n - C.rank:
        raise ConstructionError(f"Symplectic dual of {C} has rank {dual_code.rank}.")
    return dual_code


def symplectic_gram(C: AdditiveSympCode) -> np.ndarray:
    G = C.generators.array
    n = C.n
    return (gf2_matmul(G[:, :n], G[:, n:].T) + gf2_matmul(G[:, n:], G[:, :n].T)) % 2


def is_self_orthogonal(C: AdditiveSympCode) -> bool:
    return not symplectic_gram(C).any()


def same_span(A: AdditiveSympCode, B: AdditiveSympCode) -> bool:
    return A.rank == B.rank and A.contains_code(B)


# ------------------------------------------
# Bounded minimum symplectic weight
# ------------------------------------------


def symp_columns(C: AdditiveSympCode) -> np.ndarray:
    """
    Column syndromes for the search engine: per qubit the Euclidean
    syndromes of X, Z and Y in this order.
    """

    packed = pack_bits(C.check_matrix.T)
    x_cols, z_cols = packed[: C.n], packed[C.n :]
    zero = np.zeros_like(x_cols)
    columns = np.empty((C.n, PauliAlphabet), dtype=packed.dtype)
    for _, _, x, z in PauliGf4Map[1:]:
        columns[:, (x | (z << 1)) - 1] = (x_cols if x else zero) ^ (z_cols if z else zero)
    return columns


def symp_min_weight(
    C: AdditiveSympCode,
    shift: SympVector,
    radius: int,
    exclude_zero: bool = False,
    budget: Optional[int] = None,
) -> SearchOutcome:
    """
    Minimum symplectic weight in the coset C + shift, if it is at most
    radius. The witness is the (x | z) vector of the minimizer.

    Raises:
    BudgetError: If the enumeration exceeds the budget.
    """

    searcher = Searcher(symp_columns(C), radius, budget)
    outcome = searcher.search(C.check_syndrome(shift), exclude_zero=exclude_zero)
    logger.debug(f"Symplectic search in {C} at radius {radius}: {outcome.weight}")
    return outcome
