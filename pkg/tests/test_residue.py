import random

import pytest

from jrtower.errors import CertificateFailure, ResourceLimitError
from jrtower.factor import EFFORT_QUICK
from jrtower.intmath import prime_sieve
from jrtower.residue import (
    PEPIN_CAP,
    PROVEN_COMPOSITE,
    PROVEN_PRIME,
    ResidueCertificate,
    fermat_mod_pattern,
    fermat_number,
    fermat_value,
    jacobi,
    known_fermat_primes,
    nonresidue_37_check,
    pepin_test,
    residue_certificate,
)


def euler_symbol(a: int, p: int) -> int:
    """Legendre symbol by Euler's criterion, odd prime p."""
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def test_jacobi_matches_euler_criterion_on_primes():
    rng = random.Random(4001)
    odd_primes = [p for p in prime_sieve(400) if p > 2]
    for _ in range(400):
        a = rng.randrange(-500, 500)
        p = odd_primes[rng.randrange(len(odd_primes))]
        assert jacobi(a, p) == euler_symbol(a, p)


def test_jacobi_multiplicative_in_denominator():
    rng = random.Random(4002)
    for _ in range(200):
        a = rng.randrange(0, 1000)
        assert jacobi(a, 15) == jacobi(a, 3) * jacobi(a, 5)
        assert jacobi(a, 21) == jacobi(a, 3) * jacobi(a, 7)
    assert jacobi(0, 1) == 1
    assert jacobi(5, 1) == 1


def test_jacobi_rejects_even_denominator():
    with pytest.raises(ValueError):
        jacobi(3, 8)
    with pytest.raises(ValueError):
        jacobi(3, 0)
    with pytest.raises(ValueError):
        jacobi(3, -5)


def test_fermat_values():
    assert [fermat_value(i) for i in range(5)] == [3, 5, 17, 257, 65537]
    assert fermat_value(5) == 4294967297
    assert fermat_value(5) % 641 == 0  # classic factor


def test_pepin_proves_small_fermat_primality():
    for i in range(1, 5):
        assert pepin_test(i) == PROVEN_PRIME
    for i in range(5, 8):
        assert pepin_test(i) == PROVEN_COMPOSITE
    assert pepin_test(PEPIN_CAP) == PROVEN_COMPOSITE
    with pytest.raises(ResourceLimitError):
        pepin_test(PEPIN_CAP + 1)


def test_fermat_number_bundles_value_and_status():
    f4 = fermat_number(4)
    assert f4.value == 65537
    assert f4.primality == PROVEN_PRIME
    f6 = fermat_number(6)
    assert f6.primality == PROVEN_COMPOSITE


def test_known_fermat_primes_recertified():
    assert known_fermat_primes() == (3, 5, 17, 257, 65537)


def test_fermat_mod_pattern_through_index_30():
    for n in range(1, 31):
        m7, m3 = fermat_mod_pattern(n)
        assert m7 == (3 if n % 2 == 0 else 5)
        assert m3 == 2
    # cross-check the small ones against the full values
    for n in range(1, 6):
        v = fermat_value(n)
        assert fermat_mod_pattern(n) == (v % 7, v % 3)
    # the index-0 value 3 is the lone exception and is rejected
    with pytest.raises(ValueError):
        fermat_mod_pattern(0)


def test_nonresidue_37_for_every_known_fermat_prime():
    for p in (5, 17, 257, 65537):
        assert nonresidue_37_check(p) == (True, True)
        assert jacobi(3, p) == -1
        assert jacobi(7, p) == -1


def test_residue_certificate_universal_kernels():
    cert = residue_certificate(12)
    assert cert.scope == "universal"
    assert cert.kernel_basis == 3
    assert cert.checked_primes == (5, 17, 257, 65537)
    cert = residue_certificate(112)
    assert cert.scope == "universal"
    assert cert.kernel_basis == 7
    cert = residue_certificate(28)
    assert cert.scope == "universal"
    assert cert.kernel_basis == 7


def test_residue_certificate_finite_scope():
    # 78 = 2*3*13 passes every individual check but its kernel is not 3 or 7
    for p in (5, 17, 257, 65537):
        assert jacobi(78, p) == -1
    cert = residue_certificate(78)
    assert cert.scope == "finite"
    assert cert.kernel_basis is None


def test_residue_certificate_failure_reports_smallest_prime():
    with pytest.raises(CertificateFailure) as info:
        residue_certificate(20)
    assert info.value.prime == 5
    assert info.value.jacobi_value == 0
    with pytest.raises(CertificateFailure) as info:
        residue_certificate(8)
    assert info.value.prime == 17
    assert info.value.jacobi_value == 1


def test_residue_certificate_validates_claims():
    with pytest.raises(Exception):
        ResidueCertificate(
            nu=20, scope="universal", checked_primes=(5, 17, 257, 65537),
            kernel_basis=5,
        )


def test_residue_certificate_effort_passthrough():
    cert = residue_certificate(12, EFFORT_QUICK)
    assert cert.scope == "universal"
