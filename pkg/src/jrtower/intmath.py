"""Small exact integer helpers used throughout the package."""

from __future__ import annotations

import math
from functools import lru_cache

# Deterministic Miller-Rabin witness set, valid for n < 3.317e24.
_MR_BASES_SMALL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_SMALL_LIMIT = 3317044064679887385961981
# Beyond the proven range we fall back to the first 50 primes; this is the
# usual practical-determinism compromise and is documented on is_prime.
_MR_BASES_LARGE = _MR_BASES_SMALL + (
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109,
    113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191,
    193, 197, 199, 211, 223, 227, 229,
)


def isqrt(n: int) -> int:
    return math.isqrt(n)


def is_square(n: int) -> bool:
    """True iff n is a perfect square (n >= 0)."""
    return n >= 0 and math.isqrt(n) ** 2 == n


def v2(n: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("v2(0) is undefined")
    return (n & -n).bit_length() - 1


def split_two_part(n: int) -> tuple[int, int]:
    """Return (v, odd) with n = 2^v * odd for n > 0."""
    if n <= 0:
        raise ValueError("expected a positive integer")
    v = v2(n)
    return v, n >> v


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n (n >= 0, k >= 1), exactly."""
    if n < 0 or k < 1:
        raise ValueError("iroot needs n >= 0 and k >= 1")
    if n in (0, 1) or k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    # Newton iteration on integers, seeded from the float estimate.
    x = int(n ** (1.0 / k)) + 1
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def perfect_power(n: int) -> tuple[int, int] | None:
    """Return (b, k) with n = b^k and k >= 2 maximal, or None."""
    if n < 4:
        return None
    for k in range(n.bit_length(), 1, -1):
        b = iroot(n, k)
        if b >= 2 and b ** k == n:
            return b, k
    return None


def _miller_rabin(n: int, base: int) -> bool:
    if base % n == 0:
        return True
    d = n - 1
    r = v2(d)
    d >>= r
    x = pow(base, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Proven-correct for n < 3.317e24 (fixed witness set); above that it
    uses the first 50 prime bases, which has no known counterexample.
    Inputs in this package stay far below even the proven bound's use
    cases for certificates (Pepin handles the Fermat numbers).
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    bases = _MR_BASES_SMALL if n < _MR_SMALL_LIMIT else _MR_BASES_LARGE
    return all(_miller_rabin(n, b) for b in bases)


@lru_cache(maxsize=8)
def prime_sieve(limit: int) -> tuple[int, ...]:
    """All primes <= limit, ascending."""
    if limit < 2:
        return ()
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return tuple(i for i, f in enumerate(flags) if f)
