"""Deterministic budgeted integer factorization.

The factorizations feeding square-class arithmetic must be reproducible:
same input and effort always give the same result, and a blown budget
yields an explicit partial result (never a silently wrong one). Pollard
rho therefore runs with a fixed schedule of polynomial offsets and fixed
starting points instead of random ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod

from .intmath import is_prime, perfect_power, prime_sieve


@dataclass(frozen=True)
class Effort:
    """Work budget for one factorize() call.

    trial_bound: primes up to this bound are removed by sieved trial
        division (so a partial cofactor never has a factor this small).
    rho_rounds: total Pollard-rho iterations allowed across all attempts.
    """

    trial_bound: int = 10**6
    rho_rounds: int = 10**7


EFFORT_QUICK = Effort(trial_bound=10**4, rho_rounds=10**5)
EFFORT_DEFAULT = Effort()
EFFORT_THOROUGH = Effort(trial_bound=10**6, rho_rounds=10**8)

EFFORT_PRESETS = {
    "quick": EFFORT_QUICK,
    "default": EFFORT_DEFAULT,
    "thorough": EFFORT_THOROUGH,
}

COMPLETE = "complete"
PARTIAL = "partial"


@dataclass(frozen=True)
class Factorization:
    """Outcome of factorize(); immutable.

    factors maps prime -> exponent. cofactor is None when the
    factorization is complete, otherwise the remaining composite part
    (guaranteed composite, coprime to all primes <= the trial bound).
    """

    n: int
    factors: dict[int, int]
    cofactor: int | None = None

    def __post_init__(self):
        rebuilt = prod(p**e for p, e in self.factors.items()) * (self.cofactor or 1)
        if rebuilt != self.n:
            raise ValueError(f"inconsistent factorization of {self.n}")

    @property
    def status(self) -> str:
        return COMPLETE if self.cofactor is None else PARTIAL

    @property
    def complete(self) -> bool:
        return self.cofactor is None


# Per-bound blocks of sieve primes with precomputed products; a single
# gcd against a block product tells whether any of its primes divides n,
# which is much cheaper than dividing by each prime.
_BLOCK = 1024


@lru_cache(maxsize=4)
def _prime_blocks(bound: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    primes = prime_sieve(bound)
    blocks = []
    for i in range(0, len(primes), _BLOCK):
        chunk = primes[i : i + _BLOCK]
        blocks.append((chunk, prod(chunk)))
    return tuple(blocks)


def _trial_divide(n: int, bound: int, out: dict[int, int]) -> int:
    for chunk, block_prod in _prime_blocks(bound):
        if n == 1:
            break
        if gcd(n, block_prod) == 1:
            continue
        for p in chunk:
            if p * p > n:
                break
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        if 1 < n and is_prime(n):
            out[n] = out.get(n, 0) + 1
            return 1
    return n


def _brent_rho(n: int, budget: int) -> tuple[int | None, int]:
    """One deterministic Brent-rho hunt on composite odd n.

    Returns (factor or None, iterations spent). Tries polynomial offsets
    c = 1, 3, 5, ... with starting value 2, batching gcds.
    """
    spent = 0
    c = 1
    while spent < budget:
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(m, r - k, budget - spent)
                if steps <= 0:
                    break
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                spent += steps
                g = gcd(q, n)
                k += steps
            r <<= 1
        if g == n:
            # Backtrack one step at a time to split the batched gcd.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g, spent
        c += 2
    return None, spent


def factorize(n: int, effort: Effort = EFFORT_DEFAULT) -> Factorization:
    """Factor n >= 1 within the given effort budget.

    Deterministic: the result depends only on (n, effort). When the
    budget runs out the result is partial with a composite cofactor;
    a wrong answer is never returned.
    """
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    if n == 1:
        return Factorization(1, {})
    found: dict[int, int] = {}
    rest = _trial_divide(n, effort.trial_bound, found)
    if rest == 1:
        return Factorization(n, found)

    budget = effort.rho_rounds
    # Stack of (value, multiplicity) still to be split.
    pending: list[tuple[int, int]] = [(rest, 1)]
    leftovers: list[tuple[int, int]] = []
    while pending:
        m, mult = pending.pop()
        if m == 1:
            continue
        if is_prime(m):
            found[m] = found.get(m, 0) + mult
            continue
        pp = perfect_power(m)
        if pp is not None:
            base, k = pp
            pending.append((base, mult * k))
            continue
        if budget <= 0:
            leftovers.append((m, mult))
            continue
        factor, spent = _brent_rho(m, budget)
        budget -= spent
        if factor is None:
            leftovers.append((m, mult))
        else:
            pending.append((factor, mult))
            pending.append((m // factor, mult))

    if not leftovers:
        return Factorization(n, found)
    cofactor = prod(m**mult for m, mult in leftovers)
    return Factorization(n, found, cofactor)


@lru_cache(maxsize=4096)
def _factorize_cached(n: int, effort: Effort) -> Factorization:
    return factorize(n, effort)


def factorize_cached(n: int, effort: Effort = EFFORT_DEFAULT) -> Factorization:
    """Memoized factorize; safe because Factorization is treated as read-only."""
    return _factorize_cached(n, effort)


def squarefree_kernel(n: int, effort: Effort = EFFORT_DEFAULT) -> int | None:
    """Product of the primes dividing n to an odd power, or None if unknown.

    For n >= 1. A perfect square has kernel 1. Returns None when the
    factorization is partial, unless the cofactor is a perfect square
    times known primes (not attempted: partial means unknown here).
    """
    f = factorize_cached(n, effort)
    if not f.complete:
        return None
    return prod(p for p, e in f.factors.items() if e % 2 == 1)
