"""
File location; .../quantum/unioncode.py
Description: This file contains the union stabilizer codes and union
            normalizer codes, their exact distance on small instances, the
            quantum Goethals-Preparata code and the verification of its
            distance through the weight decomposition of the normalizer.
(c) 2024 QGPCodes - all rights reserved
"""

# Global imports
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Optional
import math
import time
from . import logger

# Django imports
from django.conf import settings

# Application imports
from classical.cosetcode import gp_tower
from classical.distsearch import binary_columns, min_weight, search_many
from classical.gf2poly import Poly2
from classical.lincode import (
    BitMatrix,
    BitVector,
    LinearCode,
    cyclic_code,
    extend_parity,
    gf2_null_space,
    gf2_rank,
    ideal_code,
    span_code,
)
from main.exceptions import BudgetError, ConstructionError
from quantum.stabilizer import (
    AuditReport,
    FixedPointFreeMap,
    StabilizerCode,
    audit,
    enlargement_rows,
    fixed_point_free,
    steane_enlarge,
)
from quantum.symplectic import AdditiveSympCode, SympVector, symp_inner, symp_min_weight

# Third-party imports
import numpy as np

# ------------------------------------------
# Union codes
# ------------------------------------------


@dataclass(frozen=True, eq=False)
class UnionStabilizerCode:
    """
    Direct sum of the translates t C_0 of a stabilizer code over the
    translation set T_0. The translations lie in distinct cosets of the
    normalizer and include the identity (zero vector).
    """

    base: StabilizerCode
    translations: tuple[SympVector, ...]
    label: str = ""
    check: bool = True

    def __post_init__(self):
        if not self.check:
            return
        if any(t.n != self.base.n for t in self.translations):
            raise ConstructionError(f"Translations of {self.label} do not act on {self.base.n} qubits.")
        if not any(not t for t in self.translations):
            raise ConstructionError(f"Translations of {self.label} miss the identity.")
        syndromes = {self.base.stab.symp_syndrome(t) for t in self.translations}
        if len(syndromes) != len(self.translations):
            raise ConstructionError(f"Two translations of {self.label} share a normalizer coset.")

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def K(self) -> int:
        return len(self.translations)

    @property
    def log2_dim(self) -> float:
        return math.log2(self.K) + self.base.k

    def __str__(self) -> str:
        return f"{self.label or 'union code'} (({self.n}, 2^{self.log2_dim:g}))"


@dataclass(frozen=True, eq=False)
class UnionNormalizerCode:
    """
    Union of the cosets C_0* + t over the translations.
    """

    base_norm: AdditiveSympCode
    translations: tuple[SympVector, ...]

    @cached_property
    def _coset_keys(self) -> set[int]:
        return {self.base_norm.check_syndrome(t) for t in self.translations}

    def contains(self, v: SympVector) -> bool:
        return self.base_norm.check_syndrome(v) in self._coset_keys


def union_normalizer(U: UnionStabilizerCode) -> UnionNormalizerCode:
    return UnionNormalizerCode(base_norm=U.base.norm, translations=U.translations)


def gp_translations(m: int, reps: Iterable[BitVector]) -> list[SympVector]:
    """
    T_0 = {(t_i | t_j)} for all pairs of coset representatives, i outer.
    """

    reps = list(reps)
    if len(reps) != 2 ** (m - 1):
        raise ConstructionError(f"Expected {2 ** (m - 1)} representatives, got {len(reps)}.")
    n = 2**m
    return [SympVector(n, t_i, t_j) for t_i in reps for t_j in reps]


# ------------------------------------------
# Distances
# ------------------------------------------


def coset_distance(
    C0: AdditiveSympCode,
    t1: SympVector,
    t2: SympVector,
    radius: int,
    budget: Optional[int] = None,
) -> Optional[int]:
    """
    Minimum symplectic weight in C0 + t1 + t2, or None if it exceeds radius.
    """

    if t1 == t2:
        return 0
    outcome = symp_min_weight(C0, t1 ^ t2, radius, budget=budget)
    return outcome.weight if outcome.found else None


def tilde_c0(U: UnionStabilizerCode) -> AdditiveSympCode:
    """
    Subcode of the stabilizer commuting with every translation.
    """

    stab = U.base.stab
    G = stab.generators.array
    # M[j, i] = <g_i, t_j>
    M = np.array(
        [[symp_inner(g, t) for g in stab.vectors] for t in U.translations], dtype=np.uint8
    ).reshape(len(U.translations), stab.rank)
    coefficients = gf2_null_space(M)
    rows = (coefficients.astype(np.int64) @ G.astype(np.int64)) % 2
    return AdditiveSympCode.from_rows(U.n, rows, label="tilde C0")


def element_values(C: AdditiveSympCode) -> np.ndarray:
    values = np.zeros(1, dtype=np.uint64)
    for row in C.generators.rows:
        values = np.concatenate([values, values ^ np.uint64(row.bits)])
    return values


def symp_weights(values: np.ndarray, n: int) -> np.ndarray:
    mask = np.uint64((1 << n) - 1)
    support = (values & mask) | (values >> np.uint64(n))
    return np.unpackbits(support.view(np.uint8)).reshape(len(values), 64).sum(axis=1)


def _difference_values(U: UnionStabilizerCode) -> list[int]:
    keys = [t.to_vector().bits for t in U.translations]
    return sorted({a ^ b for a in keys for b in keys})


def _check_exact_budget(U: UnionStabilizerCode, budget_log2: Optional[int]) -> None:
    if budget_log2 is None:
        budget_log2 = settings.QGP_EXACT_LOG2_BUDGET
    cost = U.base.norm.rank + 2 * math.log2(U.K)
    if cost > budget_log2 or 2 * U.n > 64:
        raise BudgetError(f"Exact distance costs 2^{cost:g} operations, the budget is 2^{budget_log2}.")


def distance_exact_small(U: UnionStabilizerCode, budget_log2: Optional[int] = None) -> int:
    """
    d = min wgt(v) over v in (C* - C*) minus tilde C_0, where
    C* - C* is the union of C_0* + t_i + t_j. Returns n + 1 when every
    such v lies in tilde C_0, i.e. no error is detectably harmful.

    Raises:
    BudgetError: If rank(C_0*) + log2(K^2) exceeds the budget.
    """

    _check_exact_budget(U, budget_log2)
    norm_values = element_values(U.base.norm)
    excluded = element_values(tilde_c0(U))
    best = U.n + 1
    for d in _difference_values(U):
        candidates = norm_values ^ np.uint64(d)
        candidates = candidates[~np.isin(candidates, excluded)]
        if candidates.size:
            best = min(best, int(symp_weights(candidates, U.n).min()))
    return best


def union_min_distance(U: UnionStabilizerCode, budget_log2: Optional[int] = None) -> int:
    """
    Minimum weight of the nonzero differences of union normalizer
    elements, a lower bound of the distance.
    """

    _check_exact_budget(U, budget_log2)
    norm_values = element_values(U.base.norm)
    best = U.n + 1
    for d in _difference_values(U):
        candidates = norm_values ^ np.uint64(d)
        candidates = candidates[candidates != 0]
        if candidates.size:
            best = min(best, int(symp_weights(candidates, U.n).min()))
    return best


# ------------------------------------------
# The quantum Goethals-Preparata code
# ------------------------------------------


@dataclass(frozen=True, eq=False)
class GPComponents:
    """
    Inputs of the quantum Goethals-Preparata code: C_G, C_P, the coset
    representatives, the map A, theta_1 and mu_1.
    """

    m: int
    c_g: LinearCode
    c_p: LinearCode
    reps: tuple[BitVector, ...]
    transform: FixedPointFreeMap
    theta1: Poly2
    mu1: Poly2

    @property
    def n(self) -> int:
        return 2**self.m

    @classmethod
    def from_manifest(cls, data: dict) -> "GPComponents":
        """
        Rebuild the components from the fields written by
        `to_manifest` (hex rows, coordinate i at bit i).
        """

        m = data["m"]
        n = 2**m
        dim = len(data["transform"])
        return cls(
            m=m,
            c_g=span_code([BitVector.from_hex(n, h) for h in data["c_g"]], n, label="C_G"),
            c_p=span_code([BitVector.from_hex(n, h) for h in data["c_p"]], n, label="C_P"),
            reps=tuple(BitVector.from_hex(n, h) for h in data["reps"]),
            transform=FixedPointFreeMap(
                dim=dim,
                matrix=BitMatrix.from_rows([BitVector.from_hex(dim, h) for h in data["transform"]], dim),
            ),
            theta1=Poly2.from_hex(data["theta1"]),
            mu1=Poly2.from_hex(data["mu1"]),
        )

    def to_manifest(self) -> dict:
        return {
            "c_g": [row.to_hex() for row in self.c_g.generator.rows],
            "c_p": [row.to_hex() for row in self.c_p.generator.rows],
            "reps": [t.to_hex() for t in self.reps],
            "transform": self.transform.to_hex_rows(),
            "theta1": self.theta1.to_hex(),
            "mu1": self.mu1.to_hex(),
        }


def gp_components(
    m: int,
    c2_exponents: Optional[tuple[int, ...]] = None,
    transform: Optional[FixedPointFreeMap] = None,
) -> GPComponents:
    tower = gp_tower(m, c2_exponents)
    if transform is None:
        transform = fixed_point_free(tower.c_p.k - tower.c_g.k)
    return GPComponents(
        m=m,
        c_g=tower.c_g,
        c_p=tower.c_p,
        reps=tower.reps,
        transform=transform,
        theta1=tower.theta1,
        mu1=tower.mu1,
    )


def build_gp_code(m: int, components: Optional[GPComponents] = None) -> UnionStabilizerCode:
    """
    The quantum Goethals-Preparata code ((2^m, 2^(2^m - 5m + 1), 8)): the
    union code of the enlargement of C_G inside C_P and the translations
    (t_i | t_j).
    """

    if components is None:
        components = gp_components(m)
    base = steane_enlarge(
        components.c_g, components.c_p, components.transform, label=f"GP base m={m}", claimed_d=8
    )
    code = UnionStabilizerCode(
        base=base, translations=tuple(gp_translations(m, components.reps)), label=f"GP m={m}"
    )
    logger.info(f"Built {code} on {base}")
    return code


# ------------------------------------------
# Verification of the distance
# ------------------------------------------


@dataclass(frozen=True)
class VerificationCheck:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "seconds": round(self.seconds, 3), **self.detail}


@dataclass(frozen=True)
class GPVerificationReport:
    """
    Outcome of verify_gp_distance. The radii give the lower bound
    min(radius_g + 1, 3 (radius_p + 1) // 2), valid only with a Reed-Muller
    radius of at least 3. The distance is certified only when this bound
    equals the weight of the upper bound witness.
    """

    m: int
    checks: tuple[VerificationCheck, ...]
    radii: dict = field(default_factory=dict)
    audit: Optional[AuditReport] = None
    log2_dim: Optional[float] = None

    def check(self, name: str) -> Optional[VerificationCheck]:
        return next((c for c in self.checks if c.name == name), None)

    @property
    def steane_bound(self) -> Optional[int]:
        if "goethals" not in self.radii or "preparata" not in self.radii:
            return None
        return min(self.radii["goethals"] + 1, 3 * (self.radii["preparata"] + 1) // 2)

    @property
    def lower_bound(self) -> Optional[int]:
        if self.radii.get("reed_muller", 0) < 3:
            return None
        return self.steane_bound

    @property
    def upper_bound(self) -> Optional[int]:
        check = self.check("upper_bound")
        if check is None or not check.passed:
            return None
        return check.detail.get("weight")

    @property
    def passed(self) -> bool:
        if not all(c.passed for c in self.checks) or self.audit is None or not self.audit.passed:
            return False
        return self.lower_bound is not None and self.lower_bound == self.upper_bound

    @property
    def distance(self) -> Optional[int]:
        return self.upper_bound if self.passed else None

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "passed": self.passed,
            "distance": self.distance,
            "radii": self.radii,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "log2_dim": self.log2_dim,
            "steane_bound": self.steane_bound,
            "checks": [c.to_dict() for c in self.checks],
            "audit": self.audit.to_dict() if self.audit is not None else None,
        }


def _run_check(name: str, body: Callable[[], tuple[bool, dict]]) -> VerificationCheck:
    started = time.perf_counter()
    try:
        passed, detail = body()
    except ConstructionError as error:
        passed, detail = False, {"error": " ".join(error.messages)}
    check = VerificationCheck(name=name, passed=passed, detail=detail, seconds=time.perf_counter() - started)
    level = logger.info if passed else logger.warning
    level(f"Check {name}: {'passed' if passed else 'FAILED'} in {check.seconds:.2f} s")
    return check


def _coset_certificate(
    C: LinearCode, reps: tuple[BitVector, ...], radius: int, workers: int, budget: int
) -> tuple[bool, dict]:
    """
    Search C and every coset C + t_i + t_j, i < j, up to radius.
    """

    shifts = [a ^ b for a, b in combinations(reps, 2)]
    base = min_weight(C, radius, budget=budget)
    outcomes = search_many(
        binary_columns(C), [C.syndrome(s) for s in shifts], radius, workers=workers, budget=budget
    )
    found = [(i, o) for i, o in enumerate(outcomes) if o.found]
    detail = {"code": str(C), "radius": radius, "cosets": len(shifts), "code_min_weight": base.to_dict()}
    if found:
        i, outcome = found[0]
        detail["counterexample"] = {"coset": i, "shift": shifts[i].to_hex(), **outcome.to_dict()}
    return not base.found and not found, detail


def verify_gp_distance(
    components: GPComponents,
    radii: Optional[dict] = None,
    workers: Optional[int] = None,
    budget: Optional[int] = None,
) -> GPVerificationReport:
    """
    Certify d = 8 for the quantum Goethals-Preparata code by checking each
    term of the weight decomposition of the union normalizer:

    (1) C_G and every coset C_G + t_i + t_j have no word of weight <= 7,
    (2) C_P and every coset C_P + t_i + t_j have no word of weight <= 5,
    (3) C_P + span{t_i} has dimension 2^m - m - 1 and no nonzero word of
        weight <= 3,
    (4) the extended cyclic codes generated by theta_1 and mu_1 meet
        trivially,
    (5) D, A D and D + A D all have full rank,
    (6) a weight-8 codeword c of C_G gives (c | 0) in the normalizer and
        outside tilde C_0.

    The radii above are the defaults. Smaller radii weaken the lower bound
    and the report then certifies no distance.

    Construction failures are reported as failed checks; budget overruns
    propagate.

    Parameters:
    components (GPComponents): The inputs, from gp_components or a manifest.
    radii (dict): Radii for goethals, preparata and reed_muller. Default is
                settings.QGP_RADII.
    workers (int): Size of the worker pool. Default is settings.QGP_WORKERS.
    budget (int): Pattern budget per search. Default is settings.QGP_SEARCH_BUDGET.

    Returns:
    report (GPVerificationReport): Per-check results with witnesses.
    """

    radii = {**settings.QGP_RADII, **(radii or {})}
    workers = workers or settings.QGP_WORKERS
    budget = settings.QGP_SEARCH_BUDGET if budget is None else budget
    m, n = components.m, components.n
    half = n // 2 - 1
    reps = components.reps
    logger.info(f"Verifying the GP code m={m} with radii {radii} on {workers} worker(s)")

    checks = [
        _run_check(
            "goethals_cosets",
            lambda: _coset_certificate(components.c_g, reps, radii["goethals"], workers, budget),
        ),
        _run_check(
            "preparata_cosets",
            lambda: _coset_certificate(components.c_p, reps, radii["preparata"], workers, budget),
        ),
    ]

    def reed_muller_layer():
        code = span_code(list(components.c_p.generator.rows) + list(reps), n, label="C_P + span{t_i}")
        outcome = min_weight(code, radii["reed_muller"], budget=budget)
        expected = n - m - 1
        detail = {"dimension": code.k, "expected_dimension": expected, "min_weight": outcome.to_dict()}
        return code.k == expected and not outcome.found, detail

    checks.append(_run_check("reed_muller_layer", reed_muller_layer))

    def idempotent_intersection():
        theta_code = extend_parity(ideal_code(half, components.theta1))
        mu_code = extend_parity(cyclic_code(half, components.mu1))
        joint = gf2_rank(np.vstack([theta_code.generator.array, mu_code.generator.array]))
        detail = {"theta1_dim": theta_code.k, "mu1_dim": mu_code.k, "sum_dim": joint}
        return joint == theta_code.k + mu_code.k, detail

    checks.append(_run_check("idempotent_intersection", idempotent_intersection))

    def enlargement_ranks():
        D, A = enlargement_rows(components.c_g, components.c_p, components.transform)
        AD = A.apply(D)
        ranks = {"D": gf2_rank(D), "AD": gf2_rank(AD), "D+AD": gf2_rank(D ^ AD)}
        return all(r == D.shape[0] for r in ranks.values()), {"dim": D.shape[0], "ranks": ranks}

    checks.append(_run_check("enlargement_rows", enlargement_ranks))

    built = {}

    def upper_bound():
        U = build_gp_code(m, components)
        built["code"] = U
        outcome = min_weight(components.c_g, radii["goethals"] + 1, budget=budget)
        if not outcome.found:
            return False, {"min_weight": outcome.to_dict()}
        v = SympVector(n, outcome.witness, BitVector.zeros(n))
        in_norm = U.base.norm.contains(v)
        in_tilde = tilde_c0(U).contains(v)
        detail = {"witness": v.to_dict(), "weight": v.weight, "in_normalizer": in_norm, "in_tilde_c0": in_tilde}
        return outcome.weight == radii["goethals"] + 1 and in_norm and not in_tilde, detail

    checks.append(_run_check("upper_bound", upper_bound))

    U = built.get("code")
    report = GPVerificationReport(
        m=m,
        checks=tuple(checks),
        radii=radii,
        audit=audit(U.base) if U is not None else None,
        log2_dim=U.log2_dim if U is not None else None,
    )
    logger.info(f"Verification of the GP code m={m}: {'passed' if report.passed else 'FAILED'}")
    return report
