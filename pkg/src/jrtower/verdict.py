"""Constructible cosines, exclusion certificates, and the final verdict.

The Julia Robinson question for the ring O^nu (all algebraic integers
obtained from the tower x_{k+1} = sqrt(nu + x_k) and its translates)
asks for the least t such that infinitely many totally positive ring
elements have all conjugates in [0, t]. Two classical inputs steer the
verdict machinery:

* Gauss-Wantzel: 2cos(2*pi/m) generates a 2-power-degree (real
  constructible) extension iff m = 2^a * (product of distinct Fermat
  primes). These cosines are the canonical small totally positive
  algebraic integers (conjugates in [0, 4]), so keeping them OUT of
  the ring is how one pushes the JR number above 4.
* A Kronecker-style floor: any ring of totally positive algebraic
  integers has JR number >= 4, and equal to an attained 4 only with
  infinitely many conjugate sets dense in [0, 4]; excluding all but
  finitely many constructible cosines rules that out.

The verdict combines: hypothesis shape of nu, tower strictness, the
sqrt(2) exclusion certificate, and per-Fermat-prime obstruction chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from .errors import (
    CertificateFailure,
    InvariantFailure,
    PreconditionError,
    ResourceLimitError,
)
from .factor import EFFORT_DEFAULT, Effort, factorize_cached
from .intmath import is_square, isqrt
from .orbit import (
    SEQUENCE_CAP,
    TowerParams,
    constant_terms,
    orbit_mod_p,
    tower_params,
    tower_strict,
)
from .residue import (
    ResidueCertificate,
    jacobi,
    known_fermat_primes,
    residue_certificate,
)
from .squareclasses import (
    Sqrt2Certificate,
    contains_sqrt,
    sqrt2_free_certificate,
    two_independent,
)

COS_M_CAP = 200
NESTED_RADICAL_CAP = 12

EXCLUDED = "excluded"
INCONCLUSIVE = "inconclusive"
THEOREM_APPLIES = "theorem-applies"


# ---------------------------------------------------------------------------
# Exact quadratic surds


@dataclass(frozen=True)
class QuadraticSurd:
    """(a + b * sqrt(D)) / q with integer a, b, q > 0, D >= 0.

    Exact: floor, ceiling, and comparisons are integer arithmetic;
    decimals are rendered only for display. b may be 0 (rational).
    """

    a: int
    b: int
    D: int
    q: int = 1

    def __post_init__(self):
        if self.q <= 0:
            raise ValueError("denominator must be positive")
        if self.D < 0:
            raise ValueError("only real surds are supported")
        if self.b < 0:
            raise ValueError("use a negative a rather than a negative b")

    @property
    def is_rational(self) -> bool:
        return self.b == 0 or is_square(self.D)

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("irrational surd")
        return Fraction(self.a + self.b * isqrt(self.D), self.q)

    def floor(self) -> int:
        # b*sqrt(D) lies in [s, s+1) with s = isqrt(b^2 D); the whole
        # value then lies in [(a+s)/q, (a+s+1)/q), an interval of
        # length 1/q that cannot cross an integer above (a+s)//q.
        s = isqrt(self.b * self.b * self.D)
        return (self.a + s) // self.q

    def ceil(self) -> int:
        if self.is_rational:
            value = self.as_fraction()
            return -((-value.numerator) // value.denominator)
        return self.floor() + 1

    def shifted(self, k: int) -> "QuadraticSurd":
        """This value plus the integer k."""
        return QuadraticSurd(self.a + k * self.q, self.b, self.D, self.q)

    def compare_int(self, k: int) -> int:
        """Sign of (self - k), exactly."""
        # a + b sqrt(D) vs k q reduces to b sqrt(D) vs kq - a; both
        # sides nonnegative once the trivial sign case is out, so one
        # squaring decides.
        rhs = k * self.q - self.a
        lhs_sq = self.b * self.b * self.D
        if rhs < 0:
            return 1
        if lhs_sq == rhs * rhs:
            return 0
        return 1 if lhs_sq > rhs * rhs else -1

    def __ge__(self, k: int) -> bool:
        return self.compare_int(k) >= 0

    def decimal(self, digits: int = 12) -> str:
        """Truncated decimal rendering with the given fractional digits."""
        scale = 10 ** (digits + 2)
        scaled = (self.a * scale + isqrt(self.b * self.b * self.D * scale * scale)) // self.q
        scaled //= 100
        sign = "-" if scaled < 0 else ""
        scaled = abs(scaled)
        whole, frac = divmod(scaled, 10**digits)
        return f"{sign}{whole}.{str(frac).zfill(digits)}"

    def __str__(self) -> str:
        if self.is_rational:
            f = self.as_fraction()
            return str(f)
        core = f"{self.a}+{self.b}*sqrt({self.D})" if self.b != 1 else f"{self.a}+sqrt({self.D})"
        return f"({core})/{self.q}" if self.q != 1 else f"({core})"

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "D": self.D, "q": self.q,
                "decimal": self.decimal()}


def alpha_surd(nu: int) -> QuadraticSurd:
    """alpha = (1 + sqrt(1 + 4 nu)) / 2, the positive root of t^2 - t - nu."""
    if nu < 2:
        raise ValueError("nu must be >= 2")
    return QuadraticSurd(1, 1, 1 + 4 * nu, 2)


def jr_upper_surd(nu: int) -> QuadraticSurd:
    """ceil(alpha) + alpha: an explicit JR upper bound for the subring.

    alpha and its translates generate infinitely many totally positive
    elements n + alpha with conjugates inside (0, ceil(alpha) + alpha].
    """
    alpha = alpha_surd(nu)
    return alpha.shifted(alpha.ceil())


# ---------------------------------------------------------------------------
# Constructible orders and cosine minimal polynomials


@dataclass(frozen=True)
class ConstructibilityDecomposition:
    """m = 2^a * (odd prime powers), with the constructibility verdict.

    constructible is None when m's factorization stayed partial.
    """

    m: int
    two_exponent: int
    odd_primes: tuple[tuple[int, int], ...]
    constructible: bool | None


def _phi_from_factors(two_exponent: int, odd_primes: tuple[tuple[int, int], ...]) -> int:
    phi = 2 ** (two_exponent - 1) if two_exponent else 1
    for p, e in odd_primes:
        phi *= p ** (e - 1) * (p - 1)
    return phi


def constructible_order(m: int, effort: Effort = EFFORT_DEFAULT) -> ConstructibilityDecomposition:
    """Is the regular m-gon (equivalently 2cos(2*pi/m)) constructible?

    Rule: every odd prime factor must be a known Fermat prime appearing
    to the first power. Cross-checked against phi(m) being a power of
    two; disagreement raises InvariantFailure.
    """
    if m < 3:
        raise ValueError("m must be >= 3")
    f = factorize_cached(m, effort)
    if not f.complete:
        return ConstructibilityDecomposition(m, 0, (), None)
    two_exp = f.factors.get(2, 0)
    odd = tuple(sorted((p, e) for p, e in f.factors.items() if p != 2))
    fermat = known_fermat_primes()
    ok = all(e == 1 and p in fermat for p, e in odd)
    phi = _phi_from_factors(two_exp, odd)
    if ok != (phi & (phi - 1) == 0):
        raise InvariantFailure(f"constructibility rule and phi disagree at m = {m}")
    return ConstructibilityDecomposition(m, two_exp, odd, ok)


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the m-th cyclotomic polynomial.

    x^m - 1 divided exactly by the cyclotomic polynomials of the
    proper divisors; integer arithmetic throughout.
    """
    poly = [0] * (m + 1)
    poly[0], poly[m] = -1, 1
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, list(_cyclotomic(d)))
    return tuple(poly)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact polynomial division (ascending coefficients)."""
    num = num[:]
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        coeff = num[k + dn]
        if coeff % lead:
            raise InvariantFailure("inexact polynomial division")
        coeff //= lead
        out[k] = coeff
        if coeff:
            for i, c in enumerate(den):
                num[k + i] -= coeff * c
    if any(num[:dn]):
        raise InvariantFailure("nonzero remainder in exact polynomial division")
    return out


def _palindrome_to_cos(coeffs: list[int]) -> list[int]:
    """Convert a palindromic Phi_m into the minimal polynomial of 2cos(2*pi/m).

    With x^d * Phi evaluated at x + 1/x, the substitution y = x + 1/x
    turns x^k + x^-k into the Chebyshev-like basis V_k(y), V_0 = 2,
    V_1 = y, V_k = y V_{k-1} - V_{k-2}. The result is monic of degree
    deg(Phi)/2.
    """
    degree = len(coeffs) - 1
    if degree % 2 or coeffs != coeffs[::-1]:
        raise InvariantFailure("expected a palindromic polynomial of even degree")
    half = degree // 2
    out = [0] * (half + 1)
    out[0] = coeffs[half]
    v_prev = [2]  # V_0
    v_cur = [0, 1]  # V_1
    for k in range(1, half + 1):
        if k > 1:
            nxt = [0] + v_cur  # y * V_{k-1}
            for i, c in enumerate(v_prev):
                nxt[i] -= c
            v_prev, v_cur = v_cur, nxt
        for i, c in enumerate(v_cur):
            out[i] += coeffs[half + k] * c
    if out[-1] != 1:
        raise InvariantFailure("cosine polynomial is not monic")
    return out


def cos_minpoly(m: int) -> list[int]:
    """Minimal polynomial (ascending coefficients) of 2cos(2*pi/m).

    Degree phi(m)/2, checked. m is capped at COS_M_CAP; use the nested
    radical checker for the power-of-two tail beyond it.
    """
    if m < 3:
        raise ValueError("m must be >= 3")
    if m > COS_M_CAP:
        raise ResourceLimitError(f"m capped at {COS_M_CAP}")
    out = _palindrome_to_cos(list(_cyclotomic(m)))
    phi = len(_cyclotomic(m)) - 1
    if len(out) - 1 != phi // 2:
        raise InvariantFailure("cosine polynomial has the wrong degree")
    return out


def _cos_minpoly_pow2(e: int) -> list[int]:
    """Minimal polynomial of 2cos(2*pi/2^e) for e >= 2, uncapped.

    Phi_{2^e} = x^(2^(e-1)) + 1 is built directly, skipping the
    divisor ladder and the public cap.
    """
    if e < 2:
        raise ValueError("e must be >= 2")
    half_deg = 2 ** (e - 1)
    coeffs = [0] * (half_deg + 1)
    coeffs[0] = coeffs[half_deg] = 1
    return _palindrome_to_cos(coeffs)


# ---------------------------------------------------------------------------
# Nested radicals s_1 = sqrt(2), s_k = sqrt(2 + s_{k-1})


def _tower_ring_mul(a: dict[int, int], b: dict[int, int], top: int) -> dict[int, int]:
    """Multiply in Z[s_1..s_top] / (s_1^2 - 2, s_k^2 - 2 - s_{k-1}).

    Elements are maps {exponent bitmask -> coefficient}; bit i-1 set
    means a factor s_i. Squares reduce downward, so recursion on the
    highest shared variable terminates.
    """
    out: dict[int, int] = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            for mask, coeff in _mul_basis(m1, m2).items():
                out[mask] = out.get(mask, 0) + c1 * c2 * coeff
    return {m: c for m, c in out.items() if c}


@lru_cache(maxsize=4096)
def _mul_basis(m1: int, m2: int) -> dict[int, int]:
    shared = m1 & m2
    if shared == 0:
        return {m1 | m2: 1}
    i = shared.bit_length()  # highest shared variable s_i
    bit = 1 << (i - 1)
    rest = _mul_basis(m1 ^ bit, m2 ^ bit)
    square = {0: 2} if i == 1 else {0: 2, 1 << (i - 2): 1}  # s_i^2
    out: dict[int, int] = {}
    for mr, cr in rest.items():
        for ms, cs in square.items():
            for mask, coeff in _mul_basis(mr, ms).items():
                out[mask] = out.get(mask, 0) + cr * cs * coeff
    return {m: c for m, c in out.items() if c}


def _radical_symbolic_check(poly: list[int], d: int) -> bool:
    """Evaluate poly at s_{d-1} in the exact tower ring; True iff zero."""
    top = d - 1
    y = {1 << (top - 1): 1}
    acc: dict[int, int] = {}
    for coeff in reversed(poly):
        acc = _tower_ring_mul(acc, y, top) if acc else {}
        if coeff:
            acc[0] = acc.get(0, 0) + coeff
            acc = {m: c for m, c in acc.items() if c}
    return not acc


def _radical_numeric_check(poly: list[int], d: int) -> bool:
    """High-precision floating check that poly annihilates s_{d-1}."""
    # |p| evaluated near s < 2 is bounded by (deg+1) * max|c| * 2^deg;
    # enough working bits beyond that bound makes cancellation to
    # 2^-100 a proof-strength signal for these exact inputs.
    needed = max(abs(c).bit_length() for c in poly) + len(poly) + 160
    for prec in (256, 1024, 4096, max(16384, needed)):
        with mpmath.workprec(prec):
            s = mpmath.sqrt(2)
            for _ in range(d - 2):
                s = mpmath.sqrt(2 + s)
            value = mpmath.mpf(0)
            for coeff in reversed(poly):
                value = value * s + coeff
            if abs(value) < mpmath.mpf(2) ** (-100):
                return True
    return False


def nested_radical_check(d: int) -> bool:
    """Verify 2cos(2*pi/2^(d+1)) = s_{d-1}, the d-1 times nested radical.

    The minimal polynomial of the cosine is built exactly; for d <= 5
    the radical is plugged in symbolically (exact tower-ring
    arithmetic), and for every d a high-precision numeric evaluation
    must vanish. Failure of either raises InvariantFailure, since the
    identity is a theorem.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    if d > NESTED_RADICAL_CAP:
        raise ResourceLimitError(f"d capped at {NESTED_RADICAL_CAP}")
    poly = _cos_minpoly_pow2(d + 1)
    if not _radical_numeric_check(poly, d):
        raise InvariantFailure(f"numeric radical check failed at d = {d}")
    if d <= 5 and not _radical_symbolic_check(poly, d):
        raise InvariantFailure(f"symbolic radical check failed at d = {d}")
    return True


def reduce_m(m: int, effort: Effort = EFFORT_DEFAULT) -> list[int] | None:
    """Split a constructible m into its prime-power components.

    [2^a] (if a >= 2) followed by the distinct Fermat primes, so that
    2cos(2*pi/m) lives in the compositum of the component fields.
    Returns None when m's factorization stayed partial; raises
    PreconditionError when m is not constructible.
    """
    decomp = constructible_order(m, effort)
    if decomp.constructible is None:
        return None
    if not decomp.constructible:
        raise PreconditionError(f"m = {m} is not a constructible order")
    parts = []
    if decomp.two_exponent >= 2:
        parts.append(2**decomp.two_exponent)
    parts.extend(p for p, _ in decomp.odd_primes)
    return parts


# ---------------------------------------------------------------------------
# Per-prime obstruction chains


@dataclass(frozen=True)
class FermatObstruction:
    """Exclusion chain for one Fermat prime p > 3 against the tower of nu.

    status "excluded" certifies 2cos(2*pi/p) (hence the p-th component
    of any constructible cosine) never enters the tower ring; the
    chain lists the verified steps in order. status "inconclusive"
    carries the reason (nu is a residue, or p divides nu).
    """

    nu: int
    p: int
    status: str
    chain: tuple[str, ...]
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.status == EXCLUDED


def fermat_obstruction(nu: int, p: int, depth: int = 5) -> FermatObstruction:
    """Run the exclusion chain for the Fermat prime p > 3.

    Requires tower strictness, verified through the given depth. The
    chain hinges on jacobi(nu, p) = -1; the orbit consequence is
    re-verified directly rather than trusted.
    """
    if p not in known_fermat_primes() or p == 3:
        raise ValueError(f"p = {p} is not a known Fermat prime greater than 3")
    strict = tower_strict(nu, min(depth, SEQUENCE_CAP))
    if not strict:
        raise PreconditionError(
            f"tower over nu = {nu} is not strict: c_{strict.witness} is a square"
        )
    j = jacobi(nu, p)
    if j == 0:
        return FermatObstruction(
            nu, p, INCONCLUSIVE, (), f"p = {p} divides nu"
        )
    if j == 1:
        return FermatObstruction(
            nu, p, INCONCLUSIVE, (), f"nu is a quadratic residue mod {p}"
        )
    if orbit_mod_p(nu, p) is not None:
        raise InvariantFailure(
            f"non-residue nu = {nu} has a vanishing orbit mod {p}"
        )
    chain = (
        f"jacobi({nu}, {p}) = -1: nu is not a square modulo {p}",
        f"the orbit of 0 under t^2 - {nu} modulo {p} never vanishes, "
        f"so {p} divides no c_n",
        f"an odd prime divides disc(x_n) only through some c_k, "
        f"so {p} divides no disc(x_n)",
        f"the field discriminant at level n divides disc(x_n), "
        f"so {p} is unramified in every level",
        f"{p} = 1 (mod 4), so sqrt({p}) generates the unique quadratic "
        f"subfield of the {p}-th cyclotomic field and would ramify {p}: "
        f"sqrt({p}) lies in no level",
        f"the field of 2cos(2*pi/{p}) contains sqrt({p}): the cosine and "
        f"its p-power relatives stay outside the tower ring",
    )
    return FermatObstruction(nu, p, EXCLUDED, chain)


# ---------------------------------------------------------------------------
# Hypothesis bundle and the verdict


@dataclass(frozen=True)
class HypothesisReport:
    """Clause-by-clause check of the theorem's shape hypotheses on nu."""

    nu: int
    params: TowerParams
    clauses: tuple[tuple[str, bool], ...]
    residue: ResidueCertificate | None
    failed_prime: int | None
    mu_not_squarefree: bool | None

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.clauses)

    @property
    def scope(self) -> str | None:
        return self.residue.scope if self.residue else None

    def failed_clauses(self) -> list[str]:
        return [name for name, ok in self.clauses if not ok]


def hypothesis_check(nu: int, effort: Effort = EFFORT_DEFAULT) -> HypothesisReport:
    """Check nu = 2^(2m) * mu, m >= 1, mu odd >= 3, nu non-square, and
    the Fermat-prime residue certificate.

    Certificate failure is folded into a failed clause (with the
    smallest violating prime recorded), not an exception.
    """
    params = tower_params(nu)
    v = params.two_adic_valuation
    clauses = [
        ("even positive 2-adic valuation", v >= 2 and v % 2 == 0),
        ("odd part at least 3", params.mu >= 3),
        ("nu is not a perfect square", not params.is_square),
    ]
    residue = None
    failed_prime = None
    try:
        residue = residue_certificate(nu, effort)
        clauses.append(("Fermat-prime non-residue certificate", True))
    except CertificateFailure as fail:
        failed_prime = fail.prime
        clauses.append(("Fermat-prime non-residue certificate", False))
    mu_not_squarefree = None
    f = factorize_cached(params.mu, effort)
    if f.complete:
        mu_not_squarefree = any(e > 1 for e in f.factors.values())
    return HypothesisReport(
        nu, params, tuple(clauses), residue, failed_prime, mu_not_squarefree
    )


@dataclass(frozen=True)
class VerdictReport:
    """Fan-in of every check feeding the JR classification for one nu."""

    nu: int
    depth: int
    hypothesis: HypothesisReport
    strict: bool
    strict_witness: int | None
    sqrt2: Sqrt2Certificate
    obstructions: tuple[FermatObstruction, ...]
    alpha: QuadraticSurd
    jr_upper: QuadraticSurd
    conclusion: str
    reasons: tuple[str, ...]
    statements: tuple[str, ...]
    finite_scope_caveat: bool

    @property
    def conclusive(self) -> bool:
        return self.conclusion == THEOREM_APPLIES

    def to_json(self) -> dict:
        return {
            "nu": self.nu,
            "depth": self.depth,
            "hypothesis": {
                "clauses": [[name, ok] for name, ok in self.hypothesis.clauses],
                "scope": self.hypothesis.scope,
                "failed_prime": self.hypothesis.failed_prime,
                "mu_not_squarefree": self.hypothesis.mu_not_squarefree,
            },
            "strict": self.strict,
            "strict_witness": self.strict_witness,
            "sqrt2_certified": self.sqrt2.certified,
            "sqrt2_reason": self.sqrt2.reason,
            "obstructions": [
                {"p": ob.p, "status": ob.status, "reason": ob.reason,
                 "chain": list(ob.chain)}
                for ob in self.obstructions
            ],
            "alpha": self.alpha.to_json(),
            "jr_upper": self.jr_upper.to_json(),
            "conclusion": self.conclusion,
            "reasons": list(self.reasons),
            "statements": list(self.statements),
            "finite_scope_caveat": self.finite_scope_caveat,
        }


# The floor rule used in the statements below: every ring of totally
# positive algebraic integers has JR number at least 4, and JR = 4
# attained forces conjugate sets filling [0, 4] arbitrarily densely,
# which only the constructible-cosine family provides here.
_KRONECKER_NOTE = (
    "any JR number of a totally positive ring is >= 4, and an attained 4 "
    "needs infinitely many constructible cosine elements below every "
    "t > 4; the certified exclusions leave only finitely many"
)


def jr_verdict(nu: int, depth: int = 5, effort: Effort = EFFORT_DEFAULT) -> VerdictReport:
    """Combine every check into the final classification for nu.

    conclusion "theorem-applies" asserts: the JR number of the tower
    ring lies in [4, ceil(alpha) + alpha], is strictly above 4 or not
    attained at 4, and the totally-positive window set is neither
    {+inf} nor [4, +inf). Anything unproven yields "inconclusive" with
    the failing checks named.
    """
    if depth < 1 or depth > SEQUENCE_CAP:
        raise ResourceLimitError(f"depth must be between 1 and {SEQUENCE_CAP}")
    hypothesis = hypothesis_check(nu, effort)
    strictness = tower_strict(nu, depth)
    sqrt2 = sqrt2_free_certificate(hypothesis.params, effort, depth)
    if strictness.strict:
        obstructions = tuple(
            fermat_obstruction(nu, p, depth)
            for p in known_fermat_primes()
            if p > 3
        )
    else:
        obstructions = ()
    alpha = alpha_surd(nu)
    upper = jr_upper_surd(nu)
    if not upper >= 4:
        raise InvariantFailure("JR upper bound fell below the floor 4")

    reasons = []
    if not hypothesis.passed:
        for name in hypothesis.failed_clauses():
            reasons.append(f"hypothesis failed: {name}")
    if not strictness.strict:
        reasons.append(
            f"tower not strict: c_{strictness.witness} is a perfect square"
        )
    if not sqrt2.certified:
        reasons.append(f"sqrt(2) exclusion not certified: {sqrt2.reason}")
    for ob in obstructions:
        if ob.status != EXCLUDED:
            reasons.append(f"Fermat prime {ob.p} not excluded: {ob.reason}")

    finite_scope = hypothesis.scope == "finite"
    if not reasons:
        conclusion = THEOREM_APPLIES
        scope_note = (
            " (conditional on no unknown Fermat prime violating the "
            "residue condition)"
            if finite_scope
            else ""
        )
        statements = (
            "the set of totally positive window bounds is not {+inf}: "
            f"infinitely many n + alpha lie below {upper.decimal(6)}",
            "the window set is not [4, +inf): all but finitely many "
            "constructible cosines are excluded from the ring" + scope_note,
            f"the JR number lies in [4, {upper.decimal(6)}]",
            "if the JR number equals 4 it is not attained as a minimum; "
            + _KRONECKER_NOTE,
        )
    else:
        conclusion = INCONCLUSIVE
        statements = ()
    return VerdictReport(
        nu=nu,
        depth=depth,
        hypothesis=hypothesis,
        strict=strictness.strict,
        strict_witness=strictness.witness,
        sqrt2=sqrt2,
        obstructions=obstructions,
        alpha=alpha,
        jr_upper=upper,
        conclusion=conclusion,
        reasons=tuple(reasons),
        statements=statements,
        finite_scope_caveat=finite_scope and conclusion == THEOREM_APPLIES,
    )


# ---------------------------------------------------------------------------
# Window enumeration and the nu = 7 exploration


def window_elements_deg2(nu: int, t, H: int) -> list[tuple[int, int]]:
    """Degree <= 2 ring elements a + b sqrt(nu) with both conjugates in (0, t).

    t may be an int or a Fraction; comparisons are exact. b ranges over
    0..H (the (a, -b) twin gives the same conjugate pair); a is bounded
    by the window itself (conjugates sum to 2a, so 0 < a < t). Returns
    (a, b) pairs sorted by (b, a).
    """
    if H < 0:
        raise ValueError("H must be >= 0")
    if H > 10**6:
        raise ResourceLimitError("H capped at 10^6")
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    if nu < 2:
        raise ValueError("nu must be >= 2")
    p, q = t.numerator, t.denominator
    out = []
    for b in range(H + 1):
        bb = b * b * nu
        # need a - b sqrt(nu) > 0 and a + b sqrt(nu) < t; for b = 0
        # this is the rational window 0 < a < t.
        a = isqrt(bb) + 1
        while True:
            rhs = p - a * q  # t - a, scaled by q
            if rhs <= 0 or rhs * rhs <= bb * q * q:
                break
            out.append((a, b))
            a += 1
    out.sort(key=lambda ab: (ab[1], ab[0]))
    return out


@dataclass(frozen=True)
class Nu7Report:
    """Numerical evidence for the open case nu = 7 (no theorem applies)."""

    depth: int
    constants: tuple[int, ...]
    factor_status: tuple[str, ...]
    independence: str
    rank: int | None
    sqrt2_status: str
    disclaimer: str


def nu7_exploration(depth: int, effort: Effort = EFFORT_DEFAULT) -> Nu7Report:
    """Collect square-class evidence about the tower over nu = 7.

    7 is odd, so the even-valuation machinery is silent; this explores
    whether the constants look 2-independent and whether sqrt(2) shows
    up, without claiming anything beyond the examined depth.
    """
    seq = constant_terms(7, depth)
    facts = tuple(factorize_cached(c, effort).status for c in seq.c)
    indep = two_independent(list(seq.c), effort)
    membership = contains_sqrt(7, depth, 2, effort)
    return Nu7Report(
        depth=depth,
        constants=seq.c,
        factor_status=facts,
        independence=indep.status,
        rank=indep.rank,
        sqrt2_status=membership.status,
        disclaimer=(
            "evidence only: statements cover levels 1.."
            f"{depth} and do not extend to the full tower"
        ),
    )
