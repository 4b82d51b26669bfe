"""
File location; .../classical/cosetcode.py
Description: This file contains the nonlinear Goethals and extended
            Preparata codes as unions of cosets of linear codes, the
            component tower they are built from, and their description
            by pairs (X, Y) of subsets of GF(2^(m-1)).
(c) 2024 QGPCodes - all rights reserved
"""

# Global imports
from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from operator import xor
from typing import Iterable, Optional
import math
from . import logger

# Django imports
from django.core.exceptions import ValidationError

# Application imports
from classical.gf2poly import FieldTable, Poly2, field_new, idempotent, minimal_polynomial
from classical.lincode import (
    BitVector,
    LinearCode,
    coset_reps_gp,
    cyclic_code,
    extend_parity,
    u_u_plus_v,
)
from main.exceptions import ConstructionError
from main.validators import validate_m

# Third-party imports
import numpy as np

# ------------------------------------------
# Parameters and components
# ------------------------------------------


@dataclass(frozen=True)
class GPParams:
    m: int
    n: int
    r: int
    s: int
    sigma: int
    K: int

    @classmethod
    def from_m(cls, m: int) -> "GPParams":
        """
        Derive n = 2^(m-1) - 1, r = 1 + 2^(m/2-2), s = 1 + 2^(m/2-1),
        sigma = 2^(m/2-1) and K = 2^(m-1).

        Raises:
        ConstructionError: If m is odd or smaller than 6.
        """

        try:
            validate_m(m)
        except ValidationError as error:
            raise ConstructionError(error.messages) from error
        half = m // 2
        params = cls(
            m=m,
            n=2 ** (m - 1) - 1,
            r=1 + 2 ** (half - 2),
            s=1 + 2 ** (half - 1),
            sigma=2 ** (half - 1),
            K=2 ** (m - 1),
        )
        if math.gcd(params.sigma + 1, params.n) != 1 or math.gcd(params.sigma - 1, params.n) != 1:
            raise ConstructionError(f"gcd(sigma +- 1, n) != 1 for m={m}.")
        return params


@dataclass(frozen=True, eq=False)
class GPTower:
    """
    All components of the Goethals and Preparata codes of parameter m:
    mu_1, mu_r, mu_s, theta_1, the extended cyclic codes C1 = <mu_1>,
    C2 = <mu_1 mu_r mu_s>, C3 = <mu_1 mu_s>, the linear codes
    C_G = |C1|C1+C2| and C_P = |C1|C1+C3|, and the coset representatives.
    """

    params: GPParams
    field: FieldTable
    mu1: Poly2
    mur: Poly2
    mus: Poly2
    theta1: Poly2
    c1: LinearCode
    c2: LinearCode
    c3: LinearCode
    c_g: LinearCode
    c_p: LinearCode
    reps: tuple[BitVector, ...]


@lru_cache(maxsize=None)
def gp_tower(m: int, c2_exponents: Optional[tuple[int, ...]] = None) -> GPTower:
    """
    Build the component tower of parameter m.

    Parameters:
    m (int): Even parameter, at least 6.
    c2_exponents (tuple of ints): Exponents i whose minimal polynomials
                    generate C2. Default is (1, r, s).

    Returns:
    tower (GPTower): The components.
    """

    params = GPParams.from_m(m)
    F = field_new(m - 1)
    n = params.n
    mu1 = minimal_polynomial(F, 1)
    mur = minimal_polynomial(F, params.r)
    mus = minimal_polynomial(F, params.s)
    theta1 = idempotent(F, 1)

    if c2_exponents is None:
        g2 = mu1 * mur * mus
    else:
        g2 = reduce(lambda a, b: a * b, (minimal_polynomial(F, i) for i in c2_exponents), Poly2(1))

    c1 = extend_parity(cyclic_code(n, mu1), label="C1")
    c2 = extend_parity(cyclic_code(n, g2), label="C2")
    c3 = extend_parity(cyclic_code(n, mu1 * mus), label="C3")
    c_g = u_u_plus_v(c1, c2, label="C_G")
    c_p = u_u_plus_v(c1, c3, label="C_P")
    reps = tuple(coset_reps_gp(F, m, theta1))

    logger.info(f"Built the tower for m={m}: {c1}, {c2}, {c3}, {c_g}, {c_p}, {len(reps)} reps")
    return GPTower(
        params=params,
        field=F,
        mu1=mu1,
        mur=mur,
        mus=mus,
        theta1=theta1,
        c1=c1,
        c2=c2,
        c3=c3,
        c_g=c_g,
        c_p=c_p,
        reps=reps,
    )


# ------------------------------------------
# Unions of cosets
# ------------------------------------------


@dataclass(frozen=True, eq=False)
class CosetUnionCode:
    """
    Union of the cosets base + t over the representatives t. The
    representatives are pairwise inequivalent modulo base and one of them
    is the zero vector.
    """

    base: LinearCode
    reps: tuple[BitVector, ...]
    label: str = ""

    def __post_init__(self):
        if any(t.length != self.base.n for t in self.reps):
            raise ConstructionError(f"Representatives of {self.label} do not have length {self.base.n}.")
        if not any(not t for t in self.reps):
            raise ConstructionError(f"Representatives of {self.label} miss the zero vector.")
        if len(self.rep_index) != len(self.reps):
            raise ConstructionError(f"Two representatives of {self.label} share a coset.")

    @cached_property
    def rep_index(self) -> dict[int, int]:
        """Syndrome of each representative mapped to its index."""
        return {self.base.syndrome(t): i for i, t in enumerate(self.reps)}

    @property
    def size_log2(self) -> float:
        return math.log2(len(self.reps)) + self.base.k

    def coset_index(self, v: BitVector) -> Optional[int]:
        return self.rep_index.get(self.base.syndrome(v))

    def contains_vector(self, v: BitVector) -> bool:
        if v.length != self.base.n:
            raise ConstructionError(f"Vector of length {v.length} does not fit {self.label}.")
        return self.coset_index(v) is not None

    def random_codeword(self, rng: np.random.Generator) -> BitVector:
        t = self.reps[int(rng.integers(len(self.reps)))]
        return t ^ self.base.random_codeword(rng)


def goethals(m: int) -> CosetUnionCode:
    """
    The Goethals code G(m): union of 2^(m-1) cosets of
    C_G = [2^m, 2^m - 4m + 2, 8].
    """

    tower = gp_tower(m)
    return CosetUnionCode(base=tower.c_g, reps=tower.reps, label="goethals")


def preparata(m: int) -> CosetUnionCode:
    """
    The extended Preparata code P(m): union of 2^(m-1) cosets of
    C_P = [2^m, 2^m - 3m + 1, 6] with the same representatives.
    """

    tower = gp_tower(m)
    return CosetUnionCode(base=tower.c_p, reps=tower.reps, label="preparata")


# ------------------------------------------
# Description by pairs of subsets
# ------------------------------------------


@dataclass(frozen=True)
class SetPair:
    """
    Pair (X, Y) of subsets of GF(2^(m-1)), elements as field integers.
    """

    X: tuple[int, ...]
    Y: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.X)) != len(self.X) or len(set(self.Y)) != len(self.Y):
            raise ConstructionError("A set of the pair has duplicate elements.")


def vector_to_setpair(F: FieldTable, v: BitVector) -> SetPair:
    """
    Read v = (1_X(alpha^i); 1_X(0); 1_Y(alpha^i); 1_Y(0)) as the pair (X, Y).
    Coordinate i < n stands for alpha^i and coordinate n for 0.
    """

    n = F.n
    if v.length != 2 * (n + 1):
        raise ConstructionError(f"Vector of length {v.length} is not of length {2 * (n + 1)}.")

    def elements(half: BitVector) -> tuple[int, ...]:
        found = [F.power(i) for i in range(n) if half[i]]
        if half[n]:
            found.append(0)
        return tuple(found)

    return SetPair(X=elements(v.slice(0, n + 1)), Y=elements(v.slice(n + 1, 2 * (n + 1))))


def setpair_to_vector(F: FieldTable, sp: SetPair) -> BitVector:
    n = F.n

    def coordinates(elements: Iterable[int]) -> list[int]:
        return [n if e == 0 else int(F.log[e]) for e in elements]

    left = BitVector.from_support(n + 1, coordinates(sp.X))
    right = BitVector.from_support(n + 1, coordinates(sp.Y))
    return left.concat(right)


def power_sum(F: FieldTable, elements: Iterable[int], e: int) -> int:
    return reduce(xor, (F.pow(x, e) for x in elements), 0)


def goethals_conditions(F: FieldTable, p: GPParams, sp: SetPair) -> bool:
    """
    Membership of (X, Y) in the Goethals code:
    (a) |X| and |Y| are even,
    (b) sum x = sum y,
    (c) sum x^r + (sum x)^r = sum y^r,
    (d) sum x^s + (sum x)^s = sum y^s.
    """

    if len(sp.X) % 2 or len(sp.Y) % 2:
        return False
    sum_x = power_sum(F, sp.X, 1)
    if sum_x != power_sum(F, sp.Y, 1):
        return False
    for e in (p.r, p.s):
        if power_sum(F, sp.X, e) ^ F.pow(sum_x, e) != power_sum(F, sp.Y, e):
            return False
    return True


def preparata_conditions(F: FieldTable, p: GPParams, sp: SetPair, sigma: Optional[int] = None) -> bool:
    """
    Membership of (X, Y) in the extended Preparata code:
    (a) |X| and |Y| are even,
    (b) sum x = sum y,
    (c) sum x^(sigma+1) + (sum x)^(sigma+1) = sum y^(sigma+1).

    Parameters:
    F (FieldTable): GF(2^(m-1)).
    p (GPParams): Parameters of the family.
    sp (SetPair): The pair (X, Y).
    sigma (int): Power of two with gcd(sigma +- 1, n) = 1. Default is
                2^(m/2-1).

    Raises:
    ConstructionError: If sigma is not admissible.
    """

    if sigma is None:
        sigma = p.sigma
    if sigma < 1 or sigma & (sigma - 1):
        raise ConstructionError(f"sigma={sigma} is not a power of two.")
    if math.gcd(sigma + 1, p.n) != 1 or math.gcd(sigma - 1, p.n) != 1:
        raise ConstructionError(f"gcd(sigma +- 1, {p.n}) != 1 for sigma={sigma}.")

    if len(sp.X) % 2 or len(sp.Y) % 2:
        return False
    sum_x = power_sum(F, sp.X, 1)
    if sum_x != power_sum(F, sp.Y, 1):
        return False
    e = sigma + 1
    return power_sum(F, sp.X, e) ^ F.pow(sum_x, e) == power_sum(F, sp.Y, e)
