"""
File location; .../quantum/oracle.py
Description: This file contains the ground-truth engines used at tiny
            scale: dense Pauli matrices and state vectors, the code spaces of
            stabilizer and union stabilizer codes, the Knill-Laflamme
            distance, exhaustive minimum weights and the random union code
            suite comparing the Knill-Laflamme distance with the exact
            union-code distance.
(c) 2024 QGPCodes - all rights reserved
"""

# Global imports
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import cached_property
from typing import Optional
from . import logger

# Django imports
from django.conf import settings

# Application imports
from classical.lincode import BitVector, LinearCode
from main.exceptions import BudgetError, ConstructionError
from quantum.constants import BruteMaxDimension, KnillLaflammeMaxQubits, OracleMaxQubits, OracleTolerance
from quantum.stabilizer import StabilizerCode
from quantum.symplectic import AdditiveSympCode, SympVector, symp_inner
from quantum.unioncode import (
    UnionStabilizerCode,
    distance_exact_small,
    element_values,
    symp_weights,
    union_min_distance,
)

# Third-party imports
import numpy as np

SIGMA_I = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

# ------------------------------------------
# Dense Pauli matrices and states
# ------------------------------------------


def kron(*ops) -> np.ndarray:
    out = np.array([[1.0 + 0j]])
    for op in ops:
        out = np.kron(out, op)
    return out


@dataclass(frozen=True, eq=False)
class PauliMatrix:
    """
    phase * (sigma_x^a_1 sigma_z^b_1) x ... x (sigma_x^a_n sigma_z^b_n),
    qubit 0 being the leftmost tensor factor.
    """

    symp: SympVector
    phase: complex = 1

    def __post_init__(self):
        if self.symp.n > OracleMaxQubits:
            raise ConstructionError(f"Dense Paulis are limited to {OracleMaxQubits} qubits, got {self.symp.n}.")
        if self.phase not in (1, 1j, -1, -1j):
            raise ConstructionError(f"Phase {self.phase} is not a power of i.")

    @classmethod
    def hermitian(cls, symp: SympVector) -> "PauliMatrix":
        """The Hermitian representative: sigma_x sigma_z = -i sigma_y."""
        return cls(symp, 1j ** ((symp.x.bits & symp.z.bits).bit_count() % 4))

    @cached_property
    def matrix(self) -> np.ndarray:
        factors = [
            (SIGMA_X if self.symp.x[i] else SIGMA_I) @ (SIGMA_Z if self.symp.z[i] else SIGMA_I)
            for i in range(self.symp.n)
        ]
        return self.phase * kron(*factors)


@dataclass(frozen=True, eq=False)
class DenseState:
    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.n > OracleMaxQubits:
            raise ConstructionError(f"Dense states are limited to {OracleMaxQubits} qubits, got {self.n}.")
        if self.amplitudes.shape != (2**self.n,):
            raise ConstructionError(f"A state on {self.n} qubits needs {2 ** self.n} amplitudes.")
        if abs(np.linalg.norm(self.amplitudes) - 1) > OracleTolerance:
            raise ConstructionError("State is not normalized.")

    @classmethod
    def normalized(cls, n: int, amplitudes: np.ndarray) -> "DenseState":
        norm = np.linalg.norm(amplitudes)
        if norm < OracleTolerance:
            raise ConstructionError("Cannot normalize the zero vector.")
        return cls(n, np.asarray(amplitudes, dtype=complex) / norm)


def _check_orthonormal(states: list[DenseState], what: str) -> None:
    V = isometry(states)
    gram = V.conj().T @ V
    if not np.allclose(gram, np.eye(len(states)), atol=OracleTolerance):
        raise ConstructionError(f"The basis of {what} is not orthonormal.")


def isometry(states: list[DenseState]) -> np.ndarray:
    """Matrix with the states as columns."""
    return np.stack([s.amplitudes for s in states], axis=1)


# ------------------------------------------
# Code spaces
# ------------------------------------------


def _projector(n: int, operators: list[SympVector]) -> np.ndarray:
    dim = 2**n
    P = np.eye(dim, dtype=complex)
    for g in operators:
        P = P @ (np.eye(dim) + PauliMatrix.hermitian(g).matrix) / 2
    return P


def codespace(S: StabilizerCode) -> list[DenseState]:
    """
    Canonical basis X_1^i_1 ... X_k^i_k |0...0> of the code space, state i
    at index i with i_1 the least significant bit.

    Raises:
    ConstructionError: If n exceeds the dense limit, the projector rank is
                        not 2^k or the basis is not orthonormal.
    """

    if S.n > OracleMaxQubits:
        raise ConstructionError(f"Dense code spaces are limited to {OracleMaxQubits} qubits, got {S.n}.")
    P = _projector(S.n, S.stab.vectors)
    rank = round(float(np.trace(P).real))
    if rank != 2**S.k:
        raise ConstructionError(f"The projector of {S} has rank {rank}, expected {2 ** S.k}.")
    P0 = P @ _projector(S.n, list(S.logical_z))
    column = int(np.argmax(np.linalg.norm(P0, axis=0)))
    zero = P0[:, column]
    logical_x = [PauliMatrix.hermitian(x).matrix for x in S.logical_x]
    states = []
    for i in range(2**S.k):
        v = zero
        for j, X in enumerate(logical_x):
            if i >> j & 1:
                v = X @ v
        states.append(DenseState.normalized(S.n, v))
    _check_orthonormal(states, str(S))
    return states


def union_codespace(U: UnionStabilizerCode) -> list[DenseState]:
    """
    Basis t_j X_1^i_1 ... X_k^i_k |0...0>, translation outer.

    Raises:
    ConstructionError: If K 2^k > 2^n or the translates are not orthogonal.
    """

    if U.K * 2**U.base.k > 2**U.n:
        raise ConstructionError(f"{U} does not fit in {U.n} qubits.")
    base = codespace(U.base)
    states = []
    for t in U.translations:
        T = PauliMatrix(t).matrix
        states.extend(DenseState(U.n, T @ s.amplitudes) for s in base)
    _check_orthonormal(states, str(U))
    return states


def knill_laflamme_distance(U: UnionStabilizerCode) -> int:
    """
    Smallest weight of a Pauli E for which <psi_a|E|psi_b> is not c(E)
    delta_ab, or n + 1 when every Pauli passes.
    """

    if U.n > KnillLaflammeMaxQubits:
        raise ConstructionError(f"The Knill-Laflamme check is limited to {KnillLaflammeMaxQubits} qubits.")
    V = isometry(union_codespace(U))
    identity = np.eye(V.shape[1])
    errors = [SympVector.from_vector(BitVector(2 * U.n, bits)) for bits in range(1, 4**U.n)]
    for E in sorted(errors, key=lambda e: (e.weight, e.x.bits, e.z.bits)):
        M = V.conj().T @ PauliMatrix(E).matrix @ V
        if not np.allclose(M, M[0, 0] * identity, atol=OracleTolerance):
            logger.debug(f"{U} fails the Knill-Laflamme condition for {E}")
            return E.weight
    return U.n + 1


# ------------------------------------------
# Exhaustive minimum weights
# ------------------------------------------


def _span_values(rows: list[int], width: int) -> np.ndarray:
    """
    Every element of the span, each new half being the previous one plus a
    generator.
    """

    if len(rows) > BruteMaxDimension or width > 64:
        raise BudgetError(f"Exhaustive enumeration of {len(rows)} rows of width {width} exceeds the limit.")
    values = np.zeros(1, dtype=np.uint64)
    for row in rows:
        values = np.concatenate([values, values ^ np.uint64(row)])
    return values


def _weights(values: np.ndarray) -> np.ndarray:
    return np.unpackbits(values.view(np.uint8)).reshape(len(values), 64).sum(axis=1)


def brute_coset_min_weight(C: LinearCode, shift: BitVector) -> tuple[int, BitVector]:
    """Minimum weight in C + shift and the smallest minimizer."""
    values = _span_values([row.bits for row in C.generator.rows], C.n) ^ np.uint64(shift.bits)
    weights = _weights(values)
    best = int(weights.min())
    witness = int(values[weights == best].min())
    return best, BitVector(C.n, witness)


def brute_min_weight(C: LinearCode) -> int:
    """
    Minimum weight of a nonzero codeword, n + 1 for the zero code.

    Raises:
    BudgetError: If k > 24.
    """

    values = _span_values([row.bits for row in C.generator.rows], C.n)[1:]
    if values.size == 0:
        return C.n + 1
    return int(_weights(values).min())


def brute_symp_min_weight(C: AdditiveSympCode, shift: SympVector, exclude_zero: bool = False) -> int:
    if C.rank > BruteMaxDimension or 2 * C.n > 64:
        raise BudgetError(f"Enumerating 2^{C.rank} elements of width {2 * C.n} exceeds the limit.")
    values = element_values(C) ^ np.uint64(shift.to_vector().bits)
    if exclude_zero:
        values = values[values != 0]
    if values.size == 0:
        return C.n + 1
    return int(symp_weights(values, C.n).min())


# ------------------------------------------
# Random union codes
# ------------------------------------------


def _random_symp(n: int, rng: np.random.Generator) -> SympVector:
    return SympVector.from_vector(BitVector.from_array(rng.integers(0, 2, 2 * n, dtype=np.uint8)))


def random_stabilizer(n: int, k: int, rng: np.random.Generator) -> StabilizerCode:
    """Random [[n, k]] code from commuting, independent random Paulis."""
    rows = []
    while len(rows) < n - k:
        g = _random_symp(n, rng)
        if not g or any(symp_inner(g, h) for h in rows):
            continue
        if AdditiveSympCode.from_rows(n, rows + [g]).rank == len(rows) + 1:
            rows.append(g)
    return StabilizerCode.from_stabilizer(n, rows, label=f"random [[{n},{k}]]")


def random_union_code(
    n: int, rng: np.random.Generator, k: Optional[int] = None, K: Optional[int] = None, corrupt: bool = False
) -> UnionStabilizerCode:
    """
    Random base code with the zero translation and K - 1 random translations
    in distinct normalizer cosets. With `corrupt` the last translation is
    moved into the normalizer coset of the first one.
    """

    if k is None:
        k = int(rng.integers(0, n))
    base = random_stabilizer(n, k, rng)
    if K is None:
        K = int(rng.integers(2 if corrupt else 1, min(4, 2 ** (n - k)) + 1))
    translations = [SympVector.zeros(n)]
    seen = {0}
    while len(translations) < K:
        t = _random_symp(n, rng)
        key = base.stab.symp_syndrome(t)
        if key not in seen:
            seen.add(key)
            translations.append(t)
    if corrupt:
        translations[-1] = translations[0] ^ base.norm.vectors[int(rng.integers(0, base.norm.rank))]
    return UnionStabilizerCode(
        base=base, translations=tuple(translations), label=f"random union n={n}", check=not corrupt
    )


@dataclass(frozen=True)
class KLInstanceResult:
    index: int
    n: int
    k: int
    K: int
    exact: Optional[int] = None
    lower_bound: Optional[int] = None
    knill_laflamme: Optional[int] = None
    error: str = ""

    @property
    def agree(self) -> bool:
        return (
            not self.error
            and self.exact == self.knill_laflamme
            and self.lower_bound is not None
            and self.lower_bound <= self.exact
        )

    def to_dict(self) -> dict:
        return {**asdict(self), "agree": self.agree}


def _run_instance(job: tuple[int, int, bool]) -> KLInstanceResult:
    seed, index, corrupt = job
    rng = np.random.default_rng([seed, index])
    U = random_union_code(int(rng.integers(2, KnillLaflammeMaxQubits + 1)), rng, corrupt=corrupt)
    fields = {"index": index, "n": U.n, "k": U.base.k, "K": U.K}
    try:
        return KLInstanceResult(
            **fields,
            exact=distance_exact_small(U),
            lower_bound=union_min_distance(U),
            knill_laflamme=knill_laflamme_distance(U),
        )
    except ConstructionError as error:
        return KLInstanceResult(**fields, error=" ".join(error.messages))


def run_kl_suite(
    instances: int, seed: Optional[int] = None, corrupt: bool = False, workers: int = 1
) -> list[KLInstanceResult]:
    """
    Compare the exact union-code distance with the Knill-Laflamme distance
    on random union codes of 2 to 5 qubits. Instance i draws from the seed
    sequence (seed, i).
    """

    seed = settings.QGP_SEED if seed is None else seed
    jobs = [(seed, i, corrupt) for i in range(instances)]
    if instances == 0:
        logger.warning("Knill-Laflamme suite called with no instances")
        return []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_instance, jobs))
    else:
        results = [_run_instance(job) for job in jobs]
    mismatches = [r for r in results if not r.agree]
    logger.info(f"Knill-Laflamme suite: {len(results) - len(mismatches)}/{len(results)} instances agree")
    return results
