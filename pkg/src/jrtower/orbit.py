"""Critical orbit of f(t) = t^2 - nu and the tower constants built from it.

The tower is x_1 = sqrt(nu), x_{k+1} = sqrt(nu + x_k); its defining
polynomials are the iterates P_n = f applied n times to t, and the
integers steering everything downstream are the critical-orbit values
c_n = -P_n evaluated at 0 for n = 1 and the forward orbit of nu under
t -> t^2 - nu afterwards:

    c_1 = nu,   c_{n+1} = c_n^2 - nu.

The companion sequence ell_n (squared norms of x_n shifted by nu) obeys
ell_1 = nu^2, ell_n = (ell_{n-1} - nu)^2 and satisfies ell_n = c_n^2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantFailure, ResourceLimitError
from .intmath import is_prime, is_square, split_two_part

# Dense iterates have degree 2^n; keep them readable at a desk.
ITERATE_CAP = 6
# Orbit constants square in size each step; c_12 of a two-digit nu
# already has a few thousand digits.
SEQUENCE_CAP = 12


@dataclass(frozen=True)
class TowerParams:
    """2-adic decomposition nu = 2^v * mu with mu odd."""

    nu: int
    two_adic_valuation: int
    mu: int
    is_square: bool

    def __post_init__(self):
        if self.nu < 2:
            raise ValueError("nu must be an integer >= 2")
        if 2**self.two_adic_valuation * self.mu != self.nu or self.mu % 2 == 0:
            raise InvariantFailure("broken 2-adic decomposition")

    @property
    def half_valuation(self) -> int | None:
        """m with v2(nu) = 2m when the valuation is even, else None."""
        v = self.two_adic_valuation
        return v // 2 if v % 2 == 0 else None


def tower_params(nu: int) -> TowerParams:
    if nu < 2:
        raise ValueError("nu must be an integer >= 2")
    v, mu = split_two_part(nu)
    return TowerParams(nu, v, mu, is_square(nu))


@dataclass(frozen=True)
class OrbitSequence:
    """First N orbit constants c_n and companions ell_n, exact."""

    nu: int
    c: tuple[int, ...]
    ell: tuple[int, ...]

    def __post_init__(self):
        cs, els = self.c, self.ell
        if not cs or cs[0] != self.nu or els[0] != self.nu**2:
            raise InvariantFailure("orbit sequence seeded incorrectly")
        for k in range(1, len(cs)):
            if cs[k] != cs[k - 1] ** 2 - self.nu:
                raise InvariantFailure(f"c recursion broken at index {k + 1}")
            if els[k] != (els[k - 1] - self.nu) ** 2:
                raise InvariantFailure(f"ell recursion broken at index {k + 1}")
            if cs[k] <= 0:
                raise InvariantFailure(f"c_{k + 1} not positive")


def constant_terms(nu: int, N: int) -> OrbitSequence:
    """Compute c_1..c_N and ell_1..ell_N for nu >= 2, N <= SEQUENCE_CAP."""
    if nu < 2:
        raise ValueError("nu must be an integer >= 2")
    if N < 1:
        raise ValueError("need at least one term")
    if N > SEQUENCE_CAP:
        raise ResourceLimitError(f"N = {N} exceeds the cap {SEQUENCE_CAP}")
    c = [nu]
    for _ in range(N - 1):
        c.append(c[-1] ** 2 - nu)
    ell = [nu**2]
    for _ in range(N - 1):
        ell.append((ell[-1] - nu) ** 2)
    return OrbitSequence(nu, tuple(c), tuple(ell))


def iterate_poly(nu: int, n: int) -> list[int]:
    """Dense coefficients (ascending) of the n-th iterate of t^2 - nu.

    Degree 2^n; n is capped at ITERATE_CAP.
    """
    if nu < 2:
        raise ValueError("nu must be an integer >= 2")
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > ITERATE_CAP:
        raise ResourceLimitError(f"n = {n} exceeds the cap {ITERATE_CAP}")
    poly = [-nu, 0, 1]
    for _ in range(n - 1):
        deg = len(poly) - 1
        sq = [0] * (2 * deg + 1)
        for i, a in enumerate(poly):
            if a == 0:
                continue
            for j, b in enumerate(poly):
                sq[i + j] += a * b
        sq[0] -= nu
        poly = sq
    return poly


def orbit_mod_p(nu: int, p: int) -> int | None:
    """Least n with p | c_n, or None if the orbit mod p never hits 0.

    The orbit is eventually periodic with at most p distinct states, so
    p steps decide the question. p must be prime.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    x = nu % p
    for n in range(1, p + 1):
        if x == 0:
            return n
        x = (x * x - nu) % p
    return None


@dataclass(frozen=True)
class ValuationProfile:
    """p-adic valuations of c_1..c_N.

    first_index is the least n with p | c_n (None when no term is
    divisible), e the common valuation at the divisible terms. The
    proven pattern is v_p(c_n) = e when first_index | n and 0 otherwise.
    """

    nu: int
    p: int
    first_index: int | None
    e: int
    valuations: tuple[int, ...]


def valuation_profile(nu: int, p: int, N: int) -> ValuationProfile:
    """Exact v_p(c_n) for n = 1..N, with the divisibility pattern checked.

    Also checks the congruence c_{q*m+r} = c_r (mod c_m^2) that drives
    the pattern, with m = first_index and c_0 read as 0. Violations of
    either raise InvariantFailure since both are proven identities.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    seq = constant_terms(nu, N)
    vals = []
    for cn in seq.c:
        v = 0
        while cn % p == 0:
            cn //= p
            v += 1
        vals.append(v)
    first = next((i + 1 for i, v in enumerate(vals) if v > 0), None)
    if first is None:
        return ValuationProfile(nu, p, None, 0, tuple(vals))
    e = vals[first - 1]
    for n in range(1, N + 1):
        expected = e if n % first == 0 else 0
        if vals[n - 1] != expected:
            raise InvariantFailure(
                f"valuation pattern broken at nu={nu}, p={p}, n={n}: "
                f"v_p = {vals[n - 1]}, expected {expected}"
            )
    modulus = seq.c[first - 1] ** 2
    for n in range(first + 1, N + 1):
        r = n % first
        j = first if r == 0 else r
        # Reducing the iteration mod c_m^2 lands on the j-th iterate of
        # 0, which is -nu at j = 1 (c_1 carries the opposite sign) and
        # c_j for j >= 2.
        target = -nu if j == 1 else seq.c[j - 1]
        if (seq.c[n - 1] - target) % modulus != 0:
            raise InvariantFailure(
                f"orbit congruence broken at nu={nu}, m={first}, n={n}"
            )
    return ValuationProfile(nu, p, first, e, tuple(vals))


@dataclass(frozen=True)
class Strictness:
    """Whether no c_n with n <= N is a perfect square.

    A square c_n collapses the tower degree at level n; witness is the
    least such n when not strict.
    """

    nu: int
    depth: int
    strict: bool
    witness: int | None

    def __bool__(self) -> bool:
        return self.strict


def tower_strict(nu: int, N: int) -> Strictness:
    """Check c_1..c_N for perfect squares."""
    seq = constant_terms(nu, N)
    for i, cn in enumerate(seq.c):
        if is_square(cn):
            return Strictness(nu, N, False, i + 1)
    return Strictness(nu, N, True, None)
