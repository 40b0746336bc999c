"""Fermat primes and quadratic-residue obstructions.

A Fermat prime p = 2^(2^k) + 1 > 3 satisfies p = 1 (mod 4), so Q(zeta_p)
contains Q(sqrt p); if nu is a quadratic non-residue mod p, the orbit of
0 under t -> t^2 - nu never vanishes mod p and sqrt(p) stays out of the
whole tower. This module certifies the non-residue inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CertificateFailure, InvariantFailure, ResourceLimitError
from .factor import EFFORT_DEFAULT, Effort, squarefree_kernel
from .intmath import is_square

# F_9 has 155 digits and Pepin on it is a few hundred modular
# squarings; above that nothing in this package needs the value.
PEPIN_CAP = 9

PROVEN_PRIME = "proven-prime"
PROVEN_COMPOSITE = "proven-composite"
UNTESTED = "untested"

# The only known Fermat primes; every index 5..32 is proven composite in
# the literature and 0..9 are re-proven here by Pepin on demand.
_KNOWN_FERMAT_PRIMES = (3, 5, 17, 257, 65537)


@dataclass(frozen=True)
class FermatNumber:
    index: int
    value: int
    primality: str

    def __post_init__(self):
        if self.value != 2 ** (2**self.index) + 1:
            raise InvariantFailure("not a Fermat number")


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a|n) for odd n >= 1, via binary reciprocity."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("Jacobi symbol needs odd n >= 1")
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def fermat_value(index: int) -> int:
    if index < 0:
        raise ValueError("Fermat index must be >= 0")
    if index > PEPIN_CAP:
        raise ResourceLimitError(
            f"Fermat numbers above F_{PEPIN_CAP} are not materialized"
        )
    return 2 ** (2**index) + 1


def pepin_test(index: int) -> str:
    """Decide primality of F_index = 2^(2^index) + 1.

    Pepin: for index >= 1, F is prime iff 3^((F-1)/2) = -1 (mod F).
    F_0 = 3 is handled by trial division. Indices above PEPIN_CAP raise.
    """
    F = fermat_value(index)
    if index == 0:
        return PROVEN_PRIME if all(F % d for d in range(2, F)) else PROVEN_COMPOSITE
    r = pow(3, (F - 1) // 2, F)
    return PROVEN_PRIME if r == F - 1 else PROVEN_COMPOSITE


def fermat_number(index: int) -> FermatNumber:
    return FermatNumber(index, fermat_value(index), pepin_test(index))


@lru_cache(maxsize=1)
def known_fermat_primes() -> tuple[int, ...]:
    """The five known Fermat primes, re-certified by Pepin at each process start."""
    certified = tuple(
        fermat_value(k) for k in range(5) if pepin_test(k) == PROVEN_PRIME
    )
    if certified != _KNOWN_FERMAT_PRIMES:
        raise InvariantFailure("Pepin disagrees with the known Fermat prime list")
    return certified


def fermat_mod_pattern(index: int) -> tuple[int, int]:
    """(F_index mod 7, F_index mod 3) for index >= 1, pattern-checked.

    The residues follow 2^(2^index) mod 7 cycling with the parity of the
    index: 3 mod 7 at even indices, 5 mod 7 at odd ones, and always
    2 mod 3. Computed without materializing the Fermat number.
    """
    if index < 1:
        raise ValueError("pattern starts at index 1")
    mod7 = (pow(2, 2**index, 7) + 1) % 7
    mod3 = (pow(2, 2**index, 3) + 1) % 3
    expected7 = 3 if index % 2 == 0 else 5
    if mod7 != expected7 or mod3 != 2:
        raise InvariantFailure(
            f"Fermat residue pattern broken at index {index}: ({mod7}, {mod3})"
        )
    return mod7, mod3


def nonresidue_37_check(p: int) -> tuple[bool, bool]:
    """Verify that 3 and 7 are non-residues modulo the Fermat prime p > 3.

    Returns (3 is a non-residue, 7 is a non-residue); both are expected
    True for every Fermat prime p > 3. Also re-derives the reciprocity
    identities (3|p)(p|3) = 1 and (7|p)(p|7) = 1, which hold because
    p = 1 (mod 4); a violation raises InvariantFailure.
    """
    if p not in known_fermat_primes() or p == 3:
        raise ValueError(f"{p} is not a known Fermat prime greater than 3")
    j3, j7 = jacobi(3, p), jacobi(7, p)
    if jacobi(p, 3) * j3 != 1 or jacobi(p, 7) * j7 != 1:
        raise InvariantFailure(f"reciprocity identity failed at p = {p}")
    return j3 == -1, j7 == -1


@dataclass(frozen=True)
class ResidueCertificate:
    """Certified: nu is a quadratic non-residue modulo Fermat primes.

    scope "universal" covers every Fermat prime > 3 (known or not):
    nu = s^2 * q with q in {3, 7}, both of which are non-residues mod
    every Fermat prime > 3, and no Fermat prime divides s (the known
    ones are checked; unknown ones exceed 2^(2^33) > nu). scope
    "finite" covers exactly the checked primes.
    """

    nu: int
    scope: str  # "universal" | "finite"
    checked_primes: tuple[int, ...]
    kernel_basis: int | None

    def __post_init__(self):
        if self.scope == "universal":
            if self.kernel_basis not in (3, 7):
                raise InvariantFailure("universal scope without a 3/7 kernel")
            quotient, rem = divmod(self.nu, self.kernel_basis)
            if rem != 0 or not is_square(quotient):
                raise InvariantFailure("kernel does not divide nu into a square")


def residue_certificate(nu: int, effort: Effort = EFFORT_DEFAULT) -> ResidueCertificate:
    """Certify jacobi(nu, p) = -1 for Fermat primes p > 3.

    Universal scope when the square-free kernel of nu is 3 or 7 and no
    known Fermat prime divides nu; otherwise each known prime is checked
    individually (finite scope). Any failure raises CertificateFailure
    naming the smallest violating prime: a Jacobi value of 0 (p divides
    nu) counts as failure, since nu = 0 is a square mod p.
    """
    if nu < 2:
        raise ValueError("nu must be an integer >= 2")
    primes = tuple(p for p in known_fermat_primes() if p > 3)
    for p in primes:
        j = jacobi(nu, p)
        if j != -1:
            raise CertificateFailure(nu, p, j)
    kernel = squarefree_kernel(nu, effort)
    if kernel in (3, 7):
        return ResidueCertificate(nu, "universal", primes, kernel)
    return ResidueCertificate(nu, "finite", primes, None)
