import random

import pytest

from jrtower.discriminant import (
    RESULTANT_CAP,
    DiscriminantReport,
    bareiss_determinant,
    disc_resultant_oracle,
    disc_xn,
    discriminant_report,
    norm_sequence,
    odd_prime_disc_support,
)
from jrtower.errors import PreconditionError, ResourceLimitError
from jrtower.orbit import constant_terms


def cofactor_det(m: list[list[int]]) -> int:
    """Reference determinant by Laplace expansion (small matrices only)."""
    k = len(m)
    if k == 1:
        return m[0][0]
    total = 0
    for j in range(k):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        sign = 1 if j % 2 == 0 else -1
        total += sign * m[0][j] * cofactor_det(minor)
    return total


def test_bareiss_against_cofactor_expansion():
    rng = random.Random(5001)
    for _ in range(120):
        k = rng.randrange(1, 6)
        m = [[rng.randrange(-9, 10) for _ in range(k)] for _ in range(k)]
        assert bareiss_determinant([row[:] for row in m]) == cofactor_det(m)


def test_bareiss_structured_cases():
    ident = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    assert bareiss_determinant(ident) == 1
    singular = [[1, 2], [2, 4]]
    assert bareiss_determinant(singular) == 0
    # leading zero forces a row swap; sign must flip exactly once
    swapped = [[0, 1], [1, 0]]
    assert bareiss_determinant(swapped) == -1


def test_disc_first_level_is_4nu():
    for nu in (5, 7, 12, 28):
        assert disc_xn(nu, 1) == 4 * nu
        assert disc_resultant_oracle(nu, 1) == 4 * nu


def test_disc_second_level_biquadratic_closed_form():
    # x^4 + p x^2 + q has discriminant 16 q (p^2 - 4q)^2
    for nu in (5, 7, 12, 28):
        p = -2 * nu
        q = nu * nu - nu
        assert disc_xn(nu, 2) == 16 * q * (p * p - 4 * q) ** 2
    assert disc_xn(12, 2) == 4866048
    assert disc_xn(5, 2) == 128000


def test_disc_recursion_equals_resultant_oracle():
    for nu in (5, 12):
        for n in range(1, RESULTANT_CAP + 1):
            assert disc_xn(nu, n) == disc_resultant_oracle(nu, n)


def test_disc_recursion_shape():
    # each level squares the previous and appends the ladder factors
    for nu in (5, 12):
        seq = constant_terms(nu, 5)
        prev = 4 * nu
        for n in range(2, 6):
            cur = disc_xn(nu, n)
            assert cur == prev * prev * 2 ** (2**n) * seq.c[n - 1]
            prev = cur


def test_disc_requires_strict_tower():
    with pytest.raises(PreconditionError):
        disc_xn(4, 2)
    with pytest.raises(PreconditionError):
        disc_xn(9, 3)


def test_resultant_cap_enforced():
    with pytest.raises(ResourceLimitError):
        disc_resultant_oracle(12, RESULTANT_CAP + 1)


def test_norm_sequence_ladder():
    seq = constant_terms(12, 4)
    assert norm_sequence(12, 0) == [48]
    norms = norm_sequence(12, 3)
    assert norms[0] == 48
    for k in range(1, 4):
        assert norms[k] == 2 ** (2 ** (k + 1)) * seq.c[k]
    assert norms[1] == 2112
    assert norms[2] == 4457472


def test_discriminant_report_cross_checks():
    rep = discriminant_report(12, 3)
    assert rep.disc == disc_xn(12, 3)
    assert rep.oracle == rep.disc
    assert rep.norms == tuple(norm_sequence(12, 2))
    rep = discriminant_report(12, 5)
    assert rep.oracle is None  # beyond the resultant cap
    assert rep.disc == disc_xn(12, 5)
    with pytest.raises(ResourceLimitError):
        discriminant_report(12, 5, with_oracle=True)


def test_discriminant_report_rejects_mismatch():
    with pytest.raises(Exception):
        DiscriminantReport(nu=12, n=2, disc=4866048, oracle=4866047, norms=(48,))


def test_odd_prime_disc_support():
    s = odd_prime_disc_support(12, 3, 4)
    assert s.divides and s.witness == 1
    s = odd_prime_disc_support(12, 11, 6)
    assert s.divides and s.witness == 2
    s = odd_prime_disc_support(12, 5, 6)
    assert not s.divides
    assert s.scope_all_n  # orbit mod 5 provably never vanishes
    s = odd_prime_disc_support(12, 13, 2)
    assert not s.divides and not s.scope_all_n  # first hit is past the bound
    with pytest.raises(ValueError):
        odd_prime_disc_support(12, 2, 4)
    with pytest.raises(ValueError):
        odd_prime_disc_support(12, 9, 4)
