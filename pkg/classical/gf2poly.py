"""
File location; .../classical/gf2poly.py
Description: This file contains the polynomial arithmetic over GF(2), the
            finite field GF(2^w) with log/antilog tables, cyclotomic cosets,
            minimal polynomials and idempotents.
(c) 2024 QGPCodes - all rights reserved
"""

# Global imports
from dataclasses import dataclass
from typing import Iterable, Optional
import math
from . import logger

# Django imports
from django.conf import settings

# Application imports
from classical.constants import PrimitivePolynomials
from main.exceptions import ConstructionError

# Third-party imports
import galois
import numpy as np

GF2 = galois.GF(2)

# Degree of the zero polynomial.
MINUS_INFINITY = -math.inf

# ------------------------------------------
# Polynomials over GF(2)
# ------------------------------------------


@dataclass(frozen=True, order=True)
class Poly2:
    """
    Polynomial over GF(2) packed into an integer: bit i is the coefficient
    of z^i. The zero polynomial is the integer 0 and has degree
    MINUS_INFINITY.
    """

    value: int = 0

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("Polynomial bits must be a nonnegative integer.")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "Poly2":
        value = 0
        for e in exponents:
            value ^= 1 << e
        return cls(value)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "Poly2":
        return cls.from_exponents(i for i, c in enumerate(coeffs) if c & 1)

    @classmethod
    def monomial(cls, k: int) -> "Poly2":
        return cls(1 << k)

    @classmethod
    def from_hex(cls, text: str) -> "Poly2":
        return cls(int(text, 16))

    @property
    def degree(self):
        return self.value.bit_length() - 1 if self.value else MINUS_INFINITY

    @property
    def coeffs(self) -> list[int]:
        return [(self.value >> i) & 1 for i in range(self.value.bit_length())]

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    def to_hex(self) -> str:
        return format(self.value, "x")

    def __bool__(self) -> bool:
        return self.value != 0

    def __add__(self, other: "Poly2") -> "Poly2":
        return Poly2(self.value ^ other.value)

    # Characteristic 2
    __sub__ = __add__

    def __mul__(self, other: "Poly2") -> "Poly2":
        return poly_mul(self, other)

    def __mod__(self, other: "Poly2") -> "Poly2":
        return poly_mod(self, other)

    def __floordiv__(self, other: "Poly2") -> "Poly2":
        return poly_divmod(self, other)[0]

    def __str__(self) -> str:
        if not self.value:
            return "0"
        terms = []
        for i in reversed(range(self.value.bit_length())):
            if (self.value >> i) & 1:
                terms.append("1" if i == 0 else "z" if i == 1 else f"z^{i}")
        return " + ".join(terms)


def poly_mul(a: Poly2, b: Poly2) -> Poly2:
    """
    Carry-less multiplication of two polynomials over GF(2).
    """

    x, y = a.value, b.value
    if x < y:
        x, y = y, x
    product = 0
    while y:
        if y & 1:
            product ^= x
        x <<= 1
        y >>= 1
    return Poly2(product)


def poly_divmod(a: Poly2, b: Poly2) -> tuple[Poly2, Poly2]:
    """
    Divide a by b with remainder.

    Raises:
    ZeroDivisionError: If b is the zero polynomial.
    """

    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    remainder = a.value
    divisor_degree = b.value.bit_length() - 1
    quotient = 0
    while remainder and remainder.bit_length() - 1 >= divisor_degree:
        shift = remainder.bit_length() - 1 - divisor_degree
        quotient ^= 1 << shift
        remainder ^= b.value << shift
    return Poly2(quotient), Poly2(remainder)


def poly_mod(a: Poly2, b: Poly2) -> Poly2:
    """
    Reduce a modulo the nonzero polynomial b.
    """

    return poly_divmod(a, b)[1]


def poly_divides(divisor: Poly2, p: Poly2) -> bool:
    """
    Return True if divisor divides p.
    """

    return not poly_mod(p, divisor)


def poly_gcd(a: Poly2, b: Poly2) -> Poly2:
    """
    Greatest common divisor by Euclid's algorithm. gcd(0, 0) is 0.
    """

    while b:
        a, b = b, poly_mod(a, b)
    return a


def cyclic_modulus(n: int) -> Poly2:
    """
    Return z^n + 1 (which equals z^n - 1 over GF(2)).
    """

    return Poly2((1 << n) | 1)


def cyclic_reduce(a: Poly2, n: int) -> Poly2:
    """
    Reduce a modulo z^n - 1 by folding the exponents modulo n.
    """

    mask = (1 << n) - 1
    value, reduced = a.value, 0
    while value:
        reduced ^= value & mask
        value >>= n
    return Poly2(reduced)


def is_irreducible(p: Poly2) -> bool:
    """
    Trial division by every polynomial of degree 1 .. deg(p) // 2.
    Intended for small degrees only.
    """

    if not p or p.degree < 1:
        return False
    for candidate in range(2, 1 << (int(p.degree) // 2 + 1)):
        if poly_divides(Poly2(candidate), p):
            return False
    return True


def gcd_identity(m: int) -> tuple[int, int]:
    """
    Evaluate the two residuals
        (2^(m-1) - 1) - (2^(m/2-1) + 1)(2^(m/2) - 2)
        (2^(m-1) - 1) - (2^(m/2-1) - 1)(2^(m/2) + 2)
    which are both 1 for even m, so gcd(sigma +- 1, n) = 1 with
    sigma = 2^(m/2-1) and n = 2^(m-1) - 1.

    Parameters:
    m (int): Even parameter of the family.

    Returns:
    residuals (tuple of ints): The two residuals.
    """

    n = 2 ** (m - 1) - 1
    sigma = 2 ** (m // 2 - 1)
    return (
        n - (sigma + 1) * (2 ** (m // 2) - 2),
        n - (sigma - 1) * (2 ** (m // 2) + 2),
    )


# ------------------------------------------
# The finite field GF(2^w)
# ------------------------------------------


@dataclass(frozen=True, eq=False)
class FieldTable:
    """
    GF(2^w) in polynomial basis. Elements are integers in [0, 2^w) whose
    bit i is the coefficient of alpha^i, alpha being the class of z.
    log[0] is -1 since zero has no discrete logarithm.
    """

    w: int
    modulus: Poly2
    log: np.ndarray
    antilog: np.ndarray

    @property
    def n(self) -> int:
        return 2**self.w - 1

    @property
    def alpha(self) -> int:
        return int(self.antilog[1 % self.n])

    def power(self, i: int) -> int:
        """Return alpha^i."""
        return int(self.antilog[i % self.n])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.antilog[(self.log[a] + self.log[b]) % self.n])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("Zero has no inverse in GF(2^w)")
        return int(self.antilog[(-self.log[a]) % self.n])

    def pow(self, a: int, e: int) -> int:
        """
        Exponentiation by squaring.
        """

        result, base = 1, a
        while e > 0:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result


def default_modulus(w: int) -> Poly2:
    """
    Return the primitive modulus for GF(2^w) from the settings override or
    from the built-in table.
    """

    overrides = getattr(settings, "QGP_PRIMITIVE_POLYNOMIALS", {})
    value = overrides.get(w, PrimitivePolynomials.get(w))
    if value is None:
        raise ConstructionError(
            f"No primitive polynomial of degree {w} is configured. Add one "
            f"through QGP_PRIMITIVE_POLYNOMIALS."
        )
    return Poly2(value)


def field_new(w: int, modulus: Optional[Poly2] = None) -> FieldTable:
    """
    Build the log and antilog tables of GF(2^w) = GF(2)[z] / modulus.
    The powers of z are iterated directly; the modulus is accepted only if
    the 2^w - 1 powers are distinct and nonzero and z^(2^w - 1) = 1, which
    holds exactly when the modulus is primitive.

    Parameters:
    w (int): Extension degree, at least 2.
    modulus (Poly2): Modulus of degree w. Default is the configured one.

    Returns:
    field (FieldTable): The completed tables.

    Raises:
    ConstructionError: If w < 2 or the modulus is not primitive of degree w.
    """

    if w < 2:
        raise ConstructionError(f"GF(2^{w}) is degenerate, w must be at least 2.")
    if modulus is None:
        modulus = default_modulus(w)
    if modulus.degree != w:
        raise ConstructionError(f"Modulus {modulus} does not have degree {w}.")

    n = 2**w - 1
    antilog = np.zeros(n, dtype=np.int64)
    log = np.full(2**w, -1, dtype=np.int64)
    x = 1
    for e in range(n):
        # A repeated power or a zero divisor means the modulus is not primitive
        if x == 0 or log[x] != -1:
            raise ConstructionError(
                f"Modulus {modulus} is not primitive: the powers of alpha "
                f"repeat after {e} steps."
            )
        antilog[e] = x
        log[x] = e
        x <<= 1
        if (x >> w) & 1:
            x ^= modulus.value
    if x != 1:
        raise ConstructionError(f"Modulus {modulus} is not primitive.")

    logger.debug(f"Built GF(2^{w}) with modulus {modulus}")
    return FieldTable(w=w, modulus=modulus, log=log, antilog=antilog)


def poly_eval(F: FieldTable, p: Poly2, e: int) -> int:
    """
    Evaluate p at the field element e by Horner's rule. The coefficients
    are lifted to {0, 1} in GF(2^w).
    """

    acc = 0
    for c in reversed(p.coeffs):
        acc = F.mul(acc, e) ^ c
    return acc


# ------------------------------------------
# Cyclotomic cosets, minimal polynomials and idempotents
# ------------------------------------------


@dataclass(frozen=True)
class CyclotomicCoset:
    representative: int
    members: tuple[int, ...]


def cyclotomic_coset(n: int, i: int) -> CyclotomicCoset:
    """
    Return the cyclotomic coset {i 2^k mod n}.

    Parameters:
    n (int): Odd modulus.
    i (int): Exponent in [0, n).

    Returns:
    coset (CyclotomicCoset): The members in ascending order.
    """

    if n < 1 or n % 2 == 0:
        raise ConstructionError(f"Cyclotomic cosets need an odd modulus, got {n}.")
    if not 0 <= i < n:
        raise ConstructionError(f"Exponent {i} is outside of [0, {n}).")
    members = set()
    j = i
    while j not in members:
        members.add(j)
        j = (2 * j) % n
    ordered = tuple(sorted(members))
    return CyclotomicCoset(representative=ordered[0], members=ordered)


def coset_representatives(n: int) -> list[int]:
    """
    Return the representatives of all cyclotomic cosets modulo n.
    """

    seen, reps = set(), []
    for i in range(n):
        if i not in seen:
            reps.append(i)
            seen.update(cyclotomic_coset(n, i).members)
    return reps


def minimal_polynomial(F: FieldTable, i: int) -> Poly2:
    """
    Expand prod (z - alpha^j) over the cyclotomic coset of i in GF(2^w)
    and check that the coefficients fall into GF(2).

    Parameters:
    F (FieldTable): The field.
    i (int): Exponent in [0, n).

    Returns:
    mu (Poly2): The minimal polynomial of alpha^i.

    Raises:
    ConstructionError: If a coefficient is not binary or a root is missed.
    """

    coset = cyclotomic_coset(F.n, i)
    # Coefficients in GF(2^w), index = degree
    coeffs = [1]
    for j in coset.members:
        root = F.power(j)
        expanded = [0] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            expanded[d + 1] ^= c
            expanded[d] ^= F.mul(c, root)
        coeffs = expanded

    if any(c not in (0, 1) for c in coeffs):
        raise ConstructionError(
            f"Minimal polynomial of alpha^{i} has coefficients outside GF(2)."
        )
    mu = Poly2.from_coeffs(coeffs)
    if any(poly_eval(F, mu, F.power(j)) != 0 for j in coset.members):
        raise ConstructionError(f"Minimal polynomial of alpha^{i} misses a root.")
    return mu


def idempotent(F: FieldTable, i: int) -> Poly2:
    """
    Compute the polynomial theta_i of degree < n with theta_i(alpha^j) = 1
    for j in the cyclotomic coset of i and 0 for all other j in [0, n).
    Each evaluation constraint in GF(2^w) is split into w binary equations
    and the n x n system over GF(2) is solved by row reduction.

    Parameters:
    F (FieldTable): The field.
    i (int): Exponent in [0, n).

    Returns:
    theta (Poly2): The idempotent.

    Raises:
    ConstructionError: If the system is singular or the result does not
                    satisfy the defining evaluations.
    """

    n, w = F.n, F.w
    coset = set(cyclotomic_coset(n, i).members)

    # values[j, k] = alpha^(j k)
    exponents = np.outer(np.arange(n), np.arange(n)) % n
    values = F.antilog[exponents]
    # system[j * w + b, k] = bit b of alpha^(j k)
    bits = (values[:, :, None] >> np.arange(w)) & 1
    system = bits.transpose(0, 2, 1).reshape(n * w, n)
    target = np.zeros(n * w, dtype=np.int64)
    for j in coset:
        target[j * w] = 1

    augmented = GF2(np.hstack([system, target[:, None]]).astype(np.uint8))
    reduced = augmented.row_reduce().view(np.ndarray)
    if not np.array_equal(reduced[:n, :n], np.eye(n, dtype=reduced.dtype)):
        raise ConstructionError(f"Evaluation system of theta_{i} is singular.")
    theta = Poly2.from_coeffs(int(c) for c in reduced[:n, n])

    for j in range(n):
        expected = 1 if j in coset else 0
        if poly_eval(F, theta, F.power(j)) != expected:
            raise ConstructionError(f"theta_{i} fails its evaluation at alpha^{j}.")
    return theta
