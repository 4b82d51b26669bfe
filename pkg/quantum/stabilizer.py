"""
File location; .../quantum/stabilizer.py
Description: This file contains the stabilizer codes in symplectic form,
            their construction from classical chains (CSS and Steane's
            enlargement with a fixed-point-free map), the extraction of
            logical operators and the invariant audit.
(c) 2024 QGPCodes - all rights reserved
"""

# Global imports
from dataclasses import dataclass, field
from typing import Iterable, Optional
from . import logger

# Application imports
from classical.gf2poly import Poly2, is_irreducible
from classical.lincode import (
    BitMatrix,
    LinearCode,
    complement_basis,
    contains,
    dual,
    gf2_matmul,
    gf2_rank,
)
from main.exceptions import ConstructionError
from quantum.constants import FixedPointFreePolynomials
from quantum.symplectic import (
    AdditiveSympCode,
    SympVector,
    is_self_orthogonal,
    same_span,
    symp_inner,
    symplectic_dual,
)

# Third-party imports
import numpy as np

# ------------------------------------------
# Stabilizer codes
# ------------------------------------------


@dataclass(frozen=True, eq=False)
class StabilizerCode:
    """
    [[n, k]] stabilizer code: the stabilizer S (rank n - k), its normalizer
    N = S* (rank n + k) and k pairs of logical operators.
    """

    n: int
    k: int
    stab: AdditiveSympCode
    norm: AdditiveSympCode
    logical_x: tuple[SympVector, ...]
    logical_z: tuple[SympVector, ...]
    claimed_d: Optional[int] = None
    label: str = ""

    @classmethod
    def from_stabilizer(
        cls, n: int, rows: Iterable, label: str = "", claimed_d: Optional[int] = None
    ) -> "StabilizerCode":
        """
        Build a code from stabilizer generators (SympVectors, BitVectors
        or 0/1 rows of length 2n).

        Raises:
        ConstructionError: If the generators do not commute.
        """

        stab = AdditiveSympCode.from_rows(n, rows, label="stabilizer")
        if not is_self_orthogonal(stab):
            raise ConstructionError(f"The stabilizer generators of {label or 'the code'} do not commute.")
        norm = symplectic_dual(stab, label="normalizer")
        return cls.from_parts(stab, norm, label=label, claimed_d=claimed_d)

    @classmethod
    def from_normalizer(
        cls, norm: AdditiveSympCode, label: str = "", claimed_d: Optional[int] = None
    ) -> "StabilizerCode":
        """
        Build a code from its normalizer, which must contain its own
        symplectic dual.
        """

        stab = symplectic_dual(norm, label="stabilizer")
        if not norm.contains_code(stab):
            raise ConstructionError(f"The normalizer of {label or 'the code'} does not contain its dual.")
        return cls.from_parts(stab, norm, label=label, claimed_d=claimed_d)

    @classmethod
    def from_parts(
        cls,
        stab: AdditiveSympCode,
        norm: AdditiveSympCode,
        label: str = "",
        claimed_d: Optional[int] = None,
    ) -> "StabilizerCode":
        n = stab.n
        k = n - stab.rank
        if norm.rank != n + k:
            raise ConstructionError(f"Normalizer rank {norm.rank} differs from n + k = {n + k}.")
        logical_x, logical_z = extract_logicals(stab, norm)
        return cls(
            n=n,
            k=k,
            stab=stab,
            norm=norm,
            logical_x=tuple(logical_x),
            logical_z=tuple(logical_z),
            claimed_d=claimed_d,
            label=label,
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "stab": [v.to_dict() for v in self.stab.vectors],
            "logical_x": [v.to_dict() for v in self.logical_x],
            "logical_z": [v.to_dict() for v in self.logical_z],
        }

    def __str__(self) -> str:
        return f"{self.label or 'code'} [[{self.n},{self.k}]]"


def symplectic_gram_schmidt(vectors: list[SympVector]) -> tuple[list[SympVector], list[SympVector]]:
    """
    Pair up vectors spanning a nondegenerate symplectic space into
    (x_i, z_i) with <x_i, z_j> = delta_ij and all other products zero.
    Every remaining w is replaced by w + <w, z>x + <w, x>z after each pair.

    Raises:
    ConstructionError: If a vector has no partner (degenerate span).
    """

    remaining = list(vectors)
    xs, zs = [], []
    while remaining:
        u = remaining.pop(0)
        partner = next((i for i, w in enumerate(remaining) if symp_inner(u, w)), None)
        if partner is None:
            raise ConstructionError("The span of the logical candidates is degenerate.")
        v = remaining.pop(partner)
        xs.append(u)
        zs.append(v)
        updated = []
        for w in remaining:
            if symp_inner(w, v):
                w = w ^ u
            if symp_inner(w, u):
                w = w ^ v
            updated.append(w)
        remaining = updated
    return xs, zs


def extract_logicals(
    stab: AdditiveSympCode, norm: AdditiveSympCode
) -> tuple[list[SympVector], list[SympVector]]:
    """
    Complete the stabilizer to a basis of the normalizer and pair up the
    added vectors by symplectic Gram-Schmidt.
    """

    added = complement_basis(stab.generators.array, norm.generators.array)
    candidates = [SympVector.from_vector(row) for row in BitMatrix(2 * stab.n, added).rows]
    return symplectic_gram_schmidt(candidates)


# ------------------------------------------
# Fixed-point-free maps
# ------------------------------------------


@dataclass(frozen=True, eq=False)
class FixedPointFreeMap:
    """
    Linear map x -> A x on GF(2)^dim with A and A + I invertible.
    """

    dim: int
    matrix: BitMatrix

    def is_fixed_point_free(self) -> bool:
        A = self.matrix.array
        identity = np.eye(self.dim, dtype=np.uint8)
        return gf2_rank(A) == self.dim and gf2_rank(A ^ identity) == self.dim

    def apply(self, rows: np.ndarray) -> np.ndarray:
        """Return the rows (A D)_i = sum_j A_ij D_j."""
        return gf2_matmul(self.matrix.array, rows)

    def to_hex_rows(self) -> list[str]:
        return [row.to_hex() for row in self.matrix.rows]


def companion_matrix(p: Poly2) -> np.ndarray:
    dim = int(p.degree)
    C = np.zeros((dim, dim), dtype=np.uint8)
    for i in range(dim - 1):
        C[i + 1, i] = 1
    C[:, dim - 1] = p.coeffs[:dim]
    return C


def fixed_point_free(dim: int) -> FixedPointFreeMap:
    """
    Companion matrix of an irreducible polynomial p of degree dim with
    p(1) = 1. det(A) = p(0) and det(A + I) = p(1), both 1.

    Raises:
    ConstructionError: If dim < 2 or the verification fails.
    """

    if dim < 2:
        raise ConstructionError(f"No fixed-point-free invertible map exists in dimension {dim}.")
    value = FixedPointFreePolynomials.get(dim)
    if value is None:
        # Odd weight means p(1) = 1
        value = next(
            v
            for v in range((1 << dim) | 1, 1 << (dim + 1), 2)
            if v.bit_count() % 2 and is_irreducible(Poly2(v))
        )
    A = FixedPointFreeMap(dim=dim, matrix=BitMatrix.from_array(companion_matrix(Poly2(value))))
    if not A.is_fixed_point_free():
        raise ConstructionError(f"The companion matrix of {Poly2(value)} has a fixed point.")
    return A


# ------------------------------------------
# Constructions from classical codes
# ------------------------------------------


def css(C: LinearCode, label: str = "") -> StabilizerCode:
    """
    Code with normalizer {(c|0)} + {(0|c)}, c in C, for dual(C) <= C.
    """

    if not contains(C, dual(C)):
        raise ConstructionError(f"{C} does not contain its dual.")
    G = C.generator.array
    zero = np.zeros_like(G)
    norm = AdditiveSympCode.from_rows(C.n, np.vstack([np.hstack([G, zero]), np.hstack([zero, G])]))
    code = StabilizerCode.from_normalizer(norm, label=label or f"CSS({C.label})")
    logger.info(f"Built {code}")
    return code


def enlargement_rows(
    C: LinearCode, Cp: LinearCode, transform: Optional[FixedPointFreeMap] = None
) -> tuple[np.ndarray, FixedPointFreeMap]:
    """
    Return the complement basis D of C in Cp and the map A, after checking
    dual(C) <= C < Cp and dim(Cp) > dim(C) + 1.
    """

    if C.n != Cp.n:
        raise ConstructionError(f"Lengths differ: {C.n} != {Cp.n}.")
    if not contains(C, dual(C)):
        raise ConstructionError(f"{C} does not contain its dual.")
    if not contains(Cp, C):
        raise ConstructionError(f"{Cp} does not contain {C}.")
    if Cp.k <= C.k + 1:
        raise ConstructionError(f"Enlargement needs k' > k + 1, got k={C.k} and k'={Cp.k}.")
    D = complement_basis(C.generator.array, Cp.generator.array)
    A = transform if transform is not None else fixed_point_free(D.shape[0])
    if A.dim != D.shape[0]:
        raise ConstructionError(f"The map acts on dimension {A.dim}, D has {D.shape[0]} rows.")
    return D, A


def steane_enlarge(
    C: LinearCode,
    Cp: LinearCode,
    transform: Optional[FixedPointFreeMap] = None,
    label: str = "",
    claimed_d: Optional[int] = None,
) -> StabilizerCode:
    """
    Steane's enlargement of the chain dual(C) <= C < Cp. The normalizer is
    generated by the rows (G | 0), (0 | G) and (D | A D), G generating C
    and D completing it to Cp.

    Parameters:
    C (LinearCode): Dual-containing code [n, k].
    Cp (LinearCode): Code [n, k'] containing C with k' > k + 1.
    transform (FixedPointFreeMap): The map A. Default is fixed_point_free.
    label (str): Name of the code.
    claimed_d (int): Distance recorded as metadata.

    Returns:
    code (StabilizerCode): The [[n, k + k' - n]] code.

    Raises:
    ConstructionError: If a precondition fails.
    """

    D, A = enlargement_rows(C, Cp, transform)
    G = C.generator.array
    zero = np.zeros_like(G)
    rows = np.vstack([np.hstack([G, zero]), np.hstack([zero, G]), np.hstack([D, A.apply(D)])])
    norm = AdditiveSympCode.from_rows(C.n, rows, label="normalizer")
    code = StabilizerCode.from_normalizer(norm, label=label or "enlarged", claimed_d=claimed_d)
    if code.k != C.k + Cp.k - C.n:
        raise ConstructionError(f"{code} does not have k = {C.k + Cp.k - C.n}.")
    logger.info(f"Built {code} from {C} and {Cp}")
    return code


# ------------------------------------------
# Audit
# ------------------------------------------


@dataclass(frozen=True)
class AuditCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class AuditReport:
    checks: tuple[AuditCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failed(self) -> list[str]:
        return [check.name for check in self.checks if not check.passed]

    def to_dict(self) -> dict:
        return {check.name: {"passed": check.passed, "detail": check.detail} for check in self.checks}


def audit(S: StabilizerCode) -> AuditReport:
    """
    Check every invariant of a stabilizer code and report each condition.
    """

    n, k = S.n, S.k
    checks = [
        AuditCheck("stabilizer self-orthogonal", is_self_orthogonal(S.stab)),
        AuditCheck("stabilizer inside normalizer", S.norm.contains_code(S.stab)),
        AuditCheck(
            "ranks",
            S.stab.rank == n - k and S.norm.rank == n + k,
            f"stabilizer {S.stab.rank}, normalizer {S.norm.rank}",
        ),
        AuditCheck("normalizer is dual of stabilizer", same_span(S.norm, symplectic_dual(S.stab))),
        AuditCheck("logical count", len(S.logical_x) == k and len(S.logical_z) == k),
    ]

    logicals = list(S.logical_x) + list(S.logical_z)
    commuting = all(not symp_inner(g, L) for g in S.stab.vectors for L in logicals)
    checks.append(AuditCheck("logicals commute with stabilizer", commuting))

    bad_pairs = [
        (i, j)
        for i, x in enumerate(S.logical_x)
        for j, z in enumerate(S.logical_z)
        if symp_inner(x, z) != (i == j)
    ]
    checks.append(AuditCheck("logical pairing", not bad_pairs, f"failing pairs {bad_pairs}" if bad_pairs else ""))

    for name, group in (("logical X commute", S.logical_x), ("logical Z commute", S.logical_z)):
        checks.append(AuditCheck(name, all(not symp_inner(u, v) for u in group for v in group)))

    stacked = S.stab.generators.array
    if logicals:
        stacked = np.vstack([stacked] + [L.to_vector().to_array()[None, :] for L in logicals])
    checks.append(AuditCheck("logicals independent", gf2_rank(stacked) == n + k))

    report = AuditReport(checks=tuple(checks))
    if not report.passed:
        logger.warning(f"Audit of {S} failed: {report.failed()}")
    return report
