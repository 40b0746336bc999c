import random

import pytest

from jrtower.factor import (
    COMPLETE,
    EFFORT_DEFAULT,
    EFFORT_PRESETS,
    EFFORT_QUICK,
    EFFORT_THOROUGH,
    Factorization,
    PARTIAL,
    factorize,
    factorize_cached,
    squarefree_kernel,
)
from jrtower.intmath import prime_sieve


def brute_factor(n: int) -> dict[int, int]:
    """Reference factorization by unbounded trial division."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def test_factorize_random_against_trial_division():
    rng = random.Random(2001)
    for _ in range(150):
        n = rng.randrange(2, 10**6)
        f = factorize(n, EFFORT_QUICK)
        assert f.complete
        assert f.factors == brute_factor(n)
        assert f.cofactor is None


def test_factorize_known_values():
    f = factorize(17412)
    assert f.factors == {2: 2, 3: 1, 1451: 1}
    assert f.status == COMPLETE
    assert factorize(1757).factors == {7: 1, 251: 1}
    assert factorize(2).factors == {2: 1}
    assert factorize(2**20).factors == {2: 20}


def test_factorize_perfect_power_beyond_trial_bound():
    # 1000003 is prime and exceeds the quick trial bound, so the square
    # must be recognized as a perfect power first.
    p = 1000003
    f = factorize(p * p, EFFORT_QUICK)
    assert f.complete
    assert f.factors == {p: 2}


def test_factorize_rho_two_medium_primes():
    p, q = 1000003, 1000033
    f = factorize(p * q, EFFORT_DEFAULT)
    assert f.complete
    assert f.factors == {p: 1, q: 1}


def test_factorize_partial_on_hard_semiprime():
    # both factors far beyond quick effort: result must stay honest
    p = 10**15 + 37
    q = 10**15 + 91
    f = factorize(p * q, EFFORT_QUICK)
    assert f.status == PARTIAL
    assert not f.complete
    assert f.cofactor == p * q
    assert f.factors == {}
    assert squarefree_kernel(p * q, EFFORT_QUICK) is None


def test_factorization_consistency_enforced():
    with pytest.raises(ValueError):
        Factorization(n=10, factors={2: 1}, cofactor=1)
    ok = Factorization(n=10, factors={2: 1, 5: 1})
    assert ok.complete
    part = Factorization(n=30, factors={2: 1}, cofactor=15)
    assert part.status == PARTIAL


def test_squarefree_kernel_values():
    assert squarefree_kernel(12) == 3
    assert squarefree_kernel(45) == 5
    assert squarefree_kernel(36) == 1
    assert squarefree_kernel(132) == 33
    assert squarefree_kernel(2) == 2
    assert squarefree_kernel(1) == 1
    rng = random.Random(2002)
    for _ in range(100):
        n = rng.randrange(2, 10**5)
        f = brute_factor(n)
        expect = 1
        for prime, e in f.items():
            if e % 2:
                expect *= prime
        assert squarefree_kernel(n, EFFORT_QUICK) == expect


def test_effort_presets():
    assert EFFORT_PRESETS["quick"] is EFFORT_QUICK
    assert EFFORT_PRESETS["default"] is EFFORT_DEFAULT
    assert EFFORT_PRESETS["thorough"] is EFFORT_THOROUGH
    assert EFFORT_QUICK.trial_bound < EFFORT_DEFAULT.trial_bound
    assert EFFORT_DEFAULT.rho_rounds < EFFORT_THOROUGH.rho_rounds


def test_factorize_cached_stable():
    a = factorize_cached(303177732, EFFORT_DEFAULT)
    b = factorize_cached(303177732, EFFORT_DEFAULT)
    assert a is b
    assert a.complete
    prod = 1
    for prime, e in a.factors.items():
        prod *= prime**e
    assert prod == 303177732


def test_factorize_domain_edges():
    one = factorize(1)
    assert one.complete and one.factors == {}
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-6)
