import random
from fractions import Fraction

import mpmath
import pytest

from jrtower.errors import PreconditionError, ResourceLimitError
from jrtower.verdict import (
    EXCLUDED,
    INCONCLUSIVE,
    NESTED_RADICAL_CAP,
    THEOREM_APPLIES,
    QuadraticSurd,
    alpha_surd,
    constructible_order,
    cos_minpoly,
    fermat_obstruction,
    hypothesis_check,
    jr_upper_surd,
    jr_verdict,
    nested_radical_check,
    nu7_exploration,
    reduce_m,
    window_elements_deg2,
)


def totient(m: int) -> int:
    """Euler phi by plain trial division."""
    out = m
    d = 2
    while d * d <= m:
        if m % d == 0:
            out -= out // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out -= out // m
    return out


# ---------------------------------------------------------------------------
# exact quadratic surds


def test_surd_floor_ceil_against_mpmath():
    rng = random.Random(8001)
    with mpmath.workdps(60):
        for _ in range(300):
            a = rng.randrange(-50, 51)
            b = rng.randrange(0, 20)
            D = rng.randrange(0, 500)
            q = rng.randrange(1, 12)
            s = QuadraticSurd(a, b, D, q)
            v = (a + b * mpmath.sqrt(D)) / q
            f = s.floor()
            assert f <= v < f + 1 or abs(v - f) < mpmath.mpf(10) ** -55
            c = s.ceil()
            assert c - 1 < v <= c or abs(v - c) < mpmath.mpf(10) ** -55


def test_surd_compare_int_exact():
    rng = random.Random(8002)
    for _ in range(300):
        a = rng.randrange(-30, 31)
        b = rng.randrange(0, 12)
        D = rng.randrange(0, 200)
        q = rng.randrange(1, 8)
        k = rng.randrange(-20, 21)
        s = QuadraticSurd(a, b, D, q)
        cmp = s.compare_int(k)
        lhs = k * q - a  # s >= k iff b*sqrt(D) >= lhs
        if cmp == 0:
            assert lhs >= 0 and b * b * D == lhs * lhs
        elif cmp > 0:
            assert lhs < 0 or b * b * D > lhs * lhs
        else:
            assert lhs > 0 and b * b * D < lhs * lhs


def test_surd_rational_detection():
    s = QuadraticSurd(3, 0, 5, 2)
    assert s.is_rational
    assert s.as_fraction() == Fraction(3, 2)
    s = QuadraticSurd(1, 1, 49, 2)  # (1 + 7) / 2
    assert s.is_rational
    assert s.as_fraction() == 4
    s = QuadraticSurd(1, 1, 48, 2)
    assert not s.is_rational


def test_surd_decimal_truncates():
    s = QuadraticSurd(0, 1, 2, 1)
    assert s.decimal(6) == "1.414213"  # truncated, not rounded (1.4142135...)
    assert QuadraticSurd(8, 0, 0, 1).decimal(6) == "8.000000"
    assert QuadraticSurd(-1, 0, 0, 2).decimal(2) == "-0.50"


def test_alpha_and_upper_bound_surds():
    a = alpha_surd(12)
    assert (a.a, a.b, a.D, a.q) == (1, 1, 49, 2)
    assert a.compare_int(4) == 0
    u = jr_upper_surd(12)
    assert u.compare_int(8) == 0
    a = alpha_surd(112)
    assert a.floor() == 11 and a.ceil() == 12
    u = jr_upper_surd(112)
    assert u.decimal(6) == "23.094810"
    with mpmath.workdps(40):
        expect = (25 + mpmath.sqrt(449)) / 2
        assert abs(mpmath.mpf(u.decimal(10)) - expect) < mpmath.mpf(10) ** -9


# ---------------------------------------------------------------------------
# constructibility and cosine minimal polynomials


def test_constructible_iff_totient_is_power_of_two():
    for m in range(3, 201):
        dec = constructible_order(m)
        phi = totient(m)
        assert dec.constructible == (phi & (phi - 1) == 0)


def test_constructible_decomposition_shape():
    dec = constructible_order(60)
    assert dec.constructible
    assert dec.two_exponent == 2
    assert dec.odd_primes == ((3, 1), (5, 1))
    dec = constructible_order(9)
    assert not dec.constructible
    dec = constructible_order(17)
    assert dec.constructible and dec.odd_primes == ((17, 1),)


def test_reduce_m_component_lists():
    assert reduce_m(60) == [4, 3, 5]
    assert reduce_m(17) == [17]
    assert reduce_m(48) == [16, 3]
    assert reduce_m(8) == [8]
    assert reduce_m(3) == [3]
    with pytest.raises(PreconditionError):
        reduce_m(7)
    with pytest.raises(PreconditionError):
        reduce_m(9)


def test_cos_minpoly_known_values():
    assert cos_minpoly(5) == [-1, 1, 1]
    assert cos_minpoly(7) == [-1, -2, 1, 1]
    assert cos_minpoly(8) == [-2, 0, 1]
    assert cos_minpoly(9) == [1, -3, 0, 1]
    assert cos_minpoly(12) == [-3, 0, 1]
    assert cos_minpoly(16) == [2, 0, -4, 0, 1]


def test_cos_minpoly_annihilates_the_cosine():
    with mpmath.workdps(50):
        for m in range(3, 61):
            poly = cos_minpoly(m)
            assert poly[-1] == 1  # monic
            x = 2 * mpmath.cos(2 * mpmath.pi / m)
            acc = mpmath.mpf(0)
            for coeff in reversed(poly):
                acc = acc * x + coeff
            assert abs(acc) < mpmath.mpf(10) ** -35, m


def test_cos_minpoly_degree_is_half_totient():
    for m in range(3, 201):
        assert len(cos_minpoly(m)) - 1 == totient(m) // 2


def test_cos_minpoly_domain():
    with pytest.raises(ValueError):
        cos_minpoly(2)
    with pytest.raises(ResourceLimitError):
        cos_minpoly(201)


def test_nested_radical_full_domain():
    for d in range(2, NESTED_RADICAL_CAP + 1):
        assert nested_radical_check(d)
    with pytest.raises(ValueError):
        nested_radical_check(1)
    with pytest.raises(ResourceLimitError):
        nested_radical_check(NESTED_RADICAL_CAP + 1)


# ---------------------------------------------------------------------------
# obstruction chains and hypothesis bundle


def test_fermat_obstruction_exclusion_chain():
    ob = fermat_obstruction(12, 5)
    assert ob.status == EXCLUDED
    assert bool(ob)
    assert len(ob.chain) == 6
    assert ob.reason is None
    for p in (17, 257, 65537):
        assert fermat_obstruction(12, p).status == EXCLUDED


def test_fermat_obstruction_inconclusive_cases():
    ob = fermat_obstruction(21, 17)
    assert ob.status == INCONCLUSIVE
    assert not bool(ob)
    assert ob.chain == ()
    assert "quadratic residue" in ob.reason
    ob = fermat_obstruction(20, 5)
    assert ob.status == INCONCLUSIVE
    assert "divides nu" in ob.reason


def test_fermat_obstruction_domain():
    with pytest.raises(ValueError):
        fermat_obstruction(12, 7)
    with pytest.raises(ValueError):
        fermat_obstruction(12, 6)
    with pytest.raises(PreconditionError):
        fermat_obstruction(4, 5)


def test_hypothesis_check_bundle():
    hyp = hypothesis_check(12)
    assert hyp.passed
    assert hyp.scope == "universal"
    assert [ok for _, ok in hyp.clauses] == [True, True, True, True]
    assert hyp.failed_clauses() == []
    hyp = hypothesis_check(8)
    assert not hyp.passed
    assert hyp.failed_prime == 17
    assert len(hyp.failed_clauses()) == 3
    hyp = hypothesis_check(20)
    assert not hyp.passed
    assert hyp.failed_prime == 5


# ---------------------------------------------------------------------------
# full verdicts


def test_jr_verdict_12_exact():
    rep = jr_verdict(12, depth=5)
    assert rep.conclusion == THEOREM_APPLIES
    assert rep.conclusive
    assert rep.jr_upper.compare_int(8) == 0
    assert rep.alpha.compare_int(4) == 0
    assert rep.strict
    assert rep.sqrt2.certified
    assert len(rep.obstructions) == 4
    assert all(ob.status == EXCLUDED for ob in rep.obstructions)
    assert not rep.finite_scope_caveat
    assert rep.reasons == ()
    assert len(rep.statements) == 4


def test_jr_verdict_universal_family():
    for nu, decimal in ((48, "15.446221"), (112, "23.094810")):
        rep = jr_verdict(nu, depth=5)
        assert rep.conclusion == THEOREM_APPLIES
        assert rep.hypothesis.scope == "universal"
        assert rep.jr_upper.decimal(6) == decimal


def test_jr_verdict_inconclusive_with_reasons():
    rep = jr_verdict(8, depth=5)
    assert rep.conclusion == INCONCLUSIVE
    assert not rep.conclusive
    assert len(rep.reasons) >= 3
    assert any("2-adic" in r for r in rep.reasons)
    assert rep.statements == ()


def test_jr_verdict_finite_scope_sets_caveat():
    rep = jr_verdict(652, depth=4)
    assert rep.conclusion == THEOREM_APPLIES
    assert rep.hypothesis.scope == "finite"
    assert rep.finite_scope_caveat


def test_jr_verdict_upper_bound_at_least_4():
    for nu in (12, 48, 112, 652):
        rep = jr_verdict(nu, depth=3)
        assert rep.jr_upper.compare_int(4) >= 0


def test_jr_verdict_json_roundtrip_types():
    doc = jr_verdict(12, depth=3).to_json()
    assert doc["conclusion"] == THEOREM_APPLIES

    def only_plain(node):
        if isinstance(node, dict):
            return all(isinstance(k, str) and only_plain(v) for k, v in node.items())
        if isinstance(node, (list, tuple)):
            return all(only_plain(v) for v in node)
        return isinstance(node, (str, int, bool)) or node is None

    assert only_plain(doc)


# ---------------------------------------------------------------------------
# window enumeration


def brute_window(nu: int, t: Fraction, H: int) -> set[tuple[int, int]]:
    """All a + b*sqrt(nu), 0 <= b <= H, with both conjugates in (0, t)."""
    out = set()
    with mpmath.workdps(60):
        root = mpmath.sqrt(nu)
        bound = float(t) + float(H * root) + 2
        for b in range(0, H + 1):
            for a in range(-int(bound), int(bound) + 1):
                lo = a - b * root
                hi = a + b * root
                if lo > 0 and hi > 0 and lo < float(t) and hi < float(t):
                    # refuse float ties; the cases below stay clear of them
                    out.add((a, b))
    return out


def test_window_known_enumeration():
    got = window_elements_deg2(12, 8, 5)
    assert got == [(1, 0), (2, 0), (3, 0), (4, 0), (5, 0), (6, 0), (7, 0), (4, 1)]
    assert window_elements_deg2(12, 8, 0) == [(k, 0) for k in range(1, 8)]
    assert window_elements_deg2(12, Fraction(15, 2), 3) == [
        (1, 0), (2, 0), (3, 0), (4, 0), (5, 0), (6, 0), (7, 0), (4, 1),
    ]


def test_window_matches_brute_force():
    rng = random.Random(8003)
    nonsquares = [2, 3, 5, 6, 7, 8, 10, 11, 12, 13]
    for _ in range(25):
        nu = nonsquares[rng.randrange(len(nonsquares))]
        t = Fraction(rng.randrange(3, 40), rng.randrange(1, 4))
        H = rng.randrange(0, 5)
        got = set(window_elements_deg2(nu, t, H))
        assert got == brute_window(nu, t, H)


def test_window_ordering_and_domain():
    elems = window_elements_deg2(12, 8, 5)
    assert elems == sorted(elems, key=lambda ab: (ab[1], ab[0]))
    with pytest.raises(ValueError):
        window_elements_deg2(12, 0, 3)
    with pytest.raises(ResourceLimitError):
        window_elements_deg2(12, 8, 10**6 + 1)


# ---------------------------------------------------------------------------
# the nu = 7 exploration bundle


def test_nu7_exploration_depth3():
    rep = nu7_exploration(3)
    assert rep.constants == (7, 42, 1757)
    assert rep.factor_status == ("complete",) * 3
    assert rep.independence == "independent"
    assert rep.rank == 3
    assert rep.sqrt2_status == "absent"
    assert "levels 1..3" in rep.disclaimer


def test_nu7_exploration_depth5():
    rep = nu7_exploration(5)
    assert rep.rank == 5
    assert rep.sqrt2_status == "absent"
    assert rep.constants[4] == 9529828309757


def test_nu7_exploration_domain():
    with pytest.raises(ValueError):
        nu7_exploration(0)
