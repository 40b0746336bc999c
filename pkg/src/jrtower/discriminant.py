"""Discriminants of the tower's defining polynomials, two ways.

The production route is the recursion

    disc(x_1) = 4 nu,
    disc(x_n) = disc(x_{n-1})^2 * 2^(2^n) * c_n   (n >= 2),

valid while the tower is strict (no c_k a perfect square, so each P_n
is the minimal polynomial of x_n, of degree 2^n). The independent
oracle recomputes disc(P_n) = (-1)^(d(d-1)/2) Res(P_n, P_n') from the
Sylvester matrix with fraction-free (Bareiss) elimination; P_n is
monic, so no leading-coefficient division is needed.

The norm ladder N_k interleaves both: N_0 = 4 nu and
N_k = 2^(2^(k+1)) * c_{k+1}, so disc(x_n) = disc(x_{n-1})^2 * N_{n-1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantFailure, PreconditionError, ResourceLimitError
from .intmath import is_prime
from .orbit import SEQUENCE_CAP, constant_terms, iterate_poly, orbit_mod_p, tower_strict

# The Sylvester matrix at level n is (2^(n+1) - 1) square; level 4
# gives 31 x 31, a comfortable desk size. Level 5 would be 63 x 63
# with thousand-digit entries: past the point of an oracle.
RESULTANT_CAP = 4


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by Bareiss elimination.

    Fraction-free: every division is exact. Row swaps flip the sign.
    """
    m = [row[:] for row in matrix]
    size = len(m)
    if any(len(row) != size for row in m):
        raise ValueError("matrix must be square")
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, size) if m[i][k] != 0), None)
            if pivot_row is None:
                return 0
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[size - 1][size - 1]


def _sylvester(p: list[int], q: list[int]) -> list[list[int]]:
    """Sylvester matrix of p and q (ascending coefficient lists)."""
    dp = len(p) - 1
    dq = len(q) - 1
    size = dp + dq
    rows = []
    p_desc = p[::-1]
    q_desc = q[::-1]
    for shift in range(dq):
        rows.append([0] * shift + p_desc + [0] * (size - dp - 1 - shift))
    for shift in range(dp):
        rows.append([0] * shift + q_desc + [0] * (size - dq - 1 - shift))
    return rows


def disc_resultant_oracle(nu: int, n: int) -> int:
    """disc(P_n) straight from the definition, independent of the recursion."""
    if n > RESULTANT_CAP:
        raise ResourceLimitError(f"resultant oracle capped at n = {RESULTANT_CAP}")
    poly = iterate_poly(nu, n)
    deriv = [k * poly[k] for k in range(1, len(poly))]
    while deriv and deriv[-1] == 0:
        deriv.pop()
    resultant = bareiss_determinant(_sylvester(poly, deriv))
    d = len(poly) - 1
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant


def disc_xn(nu: int, n: int) -> int:
    """Discriminant of the n-th tower generator via the recursion.

    Requires the tower to be strict through level n; otherwise P_n is
    not the minimal polynomial and the recursion is meaningless.
    """
    strict = tower_strict(nu, n)
    if not strict:
        raise PreconditionError(
            f"tower over nu = {nu} is not strict: c_{strict.witness} is a "
            "perfect square"
        )
    seq = constant_terms(nu, n)
    d = 4 * nu
    for k in range(2, n + 1):
        d = d * d * 2 ** (2**k) * seq.c[k - 1]
    return d


def norm_sequence(nu: int, n: int) -> list[int]:
    """[N_0, ..., N_n]: the norm factors linking consecutive discriminants.

    N_0 = 4 nu and N_k = 2^(2^(k+1)) * c_{k+1} for k >= 1, so that
    disc(x_{k+1}) = disc(x_k)^2 * N_k.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if nu < 1:
        raise ValueError("nu must be >= 1")
    norms = [4 * nu]
    if n >= 1:
        if n + 1 > SEQUENCE_CAP:
            raise ResourceLimitError(
                f"n = {n} needs c_{n + 1}, beyond the cap {SEQUENCE_CAP}"
            )
        seq = constant_terms(nu, n + 1)
        for k in range(1, n + 1):
            norms.append(2 ** (2 ** (k + 1)) * seq.c[k])
    return norms


@dataclass(frozen=True)
class DiscSupport:
    """Does the odd prime p divide any disc(x_n)?

    For odd p, p | disc(x_n) iff p | c_k for some k <= n. scope_all_n
    means the answer covers every n (the orbit mod p provably never
    vanishes), not just n <= the inspected bound.
    """

    nu: int
    p: int
    divides: bool
    witness: int | None
    scope_all_n: bool

    def __bool__(self) -> bool:
        return self.divides


def odd_prime_disc_support(nu: int, p: int, N: int) -> DiscSupport:
    """Decide p | disc(x_n) for odd prime p, for n up to N or for all n.

    p = 2 always divides and is rejected here (its valuation follows
    the 2^(2^n) ladder, not the orbit).
    """
    if p == 2:
        raise ValueError("p = 2 divides every disc(x_n); query an odd prime")
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if N < 1:
        raise ValueError("N must be >= 1")
    first = orbit_mod_p(nu, p)
    if first is None:
        return DiscSupport(nu, p, False, None, True)
    if first <= N:
        return DiscSupport(nu, p, True, first, False)
    return DiscSupport(nu, p, False, None, False)


@dataclass(frozen=True)
class DiscriminantReport:
    """Recursion value, oracle value (when run), and the norm ladder."""

    nu: int
    n: int
    disc: int
    oracle: int | None
    norms: tuple[int, ...]

    def __post_init__(self):
        if self.oracle is not None and self.oracle != self.disc:
            raise InvariantFailure(
                f"discriminant recursion and resultant oracle disagree at "
                f"nu = {self.nu}, n = {self.n}"
            )


def discriminant_report(nu: int, n: int, with_oracle: bool | None = None) -> DiscriminantReport:
    """Assemble disc(x_n) with its norm ladder and (for n <= 4) the oracle.

    with_oracle = None runs the oracle whenever n is within its cap;
    True forces it (raising past the cap); False skips it.
    """
    disc = disc_xn(nu, n)
    norms = tuple(norm_sequence(nu, n - 1))
    oracle = None
    if with_oracle is None:
        with_oracle = n <= RESULTANT_CAP
    if with_oracle:
        oracle = disc_resultant_oracle(nu, n)
    return DiscriminantReport(nu, n, disc, oracle, norms)
