import random
from math import gcd

import pytest

from ballquot.cyclo import (FULL, MINUS, PLUS, InternalCheckError, OrbitSet,
                            complex_conjugate_orbit, cyclotomic_polynomial,
                            euler_phi, factorize, field_discriminant,
                            full_orbit, is_reducible, kronecker, orbit_sets,
                            phi_sieve, suitable_fields, units_mod)


# ---------------------------------------------------------------------------
# oracles

def legendre_by_squaring(a, p):
    """Exhaustive quadratic-residue test modulo an odd prime."""
    a %= p
    if a == 0:
        return 0
    squares = {(x * x) % p for x in range(1, p)}
    return 1 if a in squares else -1


def kronecker_oracle(a, n):
    """Factor the bottom argument, multiply Legendre / 2-adic values."""
    assert n > 0
    result, m, p = 1, n, 2
    while m > 1:
        while m % p == 0:
            if p == 2:
                if a % 2 == 0:
                    return 0
                result *= 1 if a % 8 in (1, 7) else -1
            else:
                result *= legendre_by_squaring(a, p)
            m //= p
        p += 1 if p == 2 else 2
    return result


# ---------------------------------------------------------------------------
# totients and factorization

def test_factorize():
    assert factorize(1) == ()
    assert factorize(12) == ((2, 2), (3, 1))
    assert factorize(90) == ((2, 1), (3, 2), (5, 1))
    for n in range(1, 200):
        prod = 1
        for p, e in factorize(n):
            prod *= p ** e
        assert prod == n


def test_euler_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(30) == 8
    # direct unit count oracle
    assert euler_phi(90) == sum(1 for a in range(1, 91) if gcd(a, 90) == 1) == 24


def test_euler_phi_multiplicative():
    rng = random.Random(0)
    for _ in range(100):
        m, n = rng.randint(1, 60), rng.randint(1, 60)
        if gcd(m, n) == 1:
            assert euler_phi(m * n) == euler_phi(m) * euler_phi(n)


def test_phi_sieve_matches_phi():
    ph = phi_sieve(300)
    for n in range(1, 301):
        assert ph[n] == euler_phi(n)


# ---------------------------------------------------------------------------
# Kronecker symbol

def test_kronecker_examples():
    assert kronecker(-7, 1) == 1
    # factor-by-factor oracle: (-7/2) = +1 (since -7 = 1 mod 8),
    # (-7/3) = legendre(2, 3) = -1, so the product is -1
    assert kronecker_oracle(-7, 6) == -1
    assert kronecker(-7, 6) == -1
    assert legendre_by_squaring(-1, 7) == -1
    assert kronecker(-1, 7) == -1


def test_kronecker_against_oracle():
    for a in (-15, -11, -8, -7, -6, -5, -4, -3, -2, -1, 1, 2, 3, 5, 12):
        for n in range(1, 120):
            assert kronecker(a, n) == kronecker_oracle(a, n), (a, n)


def test_kronecker_conventions():
    # bottom 0 and negative bottoms
    assert kronecker(1, 0) == 1
    assert kronecker(-1, 0) == 1
    assert kronecker(5, 0) == 0
    assert kronecker(-3, -1) == -1
    assert kronecker(3, -1) == 1
    for a in range(-20, 21):
        for n in range(-20, 21):
            if n != 0:
                assert kronecker(a, -n) == kronecker(a, -1) * kronecker(a, n)


def test_kronecker_multiplicative_in_bottom():
    rng = random.Random(1)
    for _ in range(200):
        a = rng.randint(-30, 30)
        m, n = rng.randint(1, 40), rng.randint(1, 40)
        assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


# ---------------------------------------------------------------------------
# reducibility and orbits

def test_field_discriminant():
    assert field_discriminant(-7) == -7
    assert field_discriminant(-1) == -4
    assert field_discriminant(-2) == -8
    assert field_discriminant(-5) == -20
    assert field_discriminant(-15) == -15


def test_is_reducible_examples():
    assert is_reducible(7, -7)
    assert is_reducible(8, -2)
    assert not is_reducible(8, -5)
    assert is_reducible(8, -1)
    assert not is_reducible(7, -5)
    assert not is_reducible(1, -3) and not is_reducible(2, -3)


def test_is_reducible_matches_character_scan():
    # independent re-implementation of the scan criterion
    def scan(d, D):
        values = {}
        for a in range(1, 10 * d + 1):
            if gcd(a, d) != 1:
                continue
            v = kronecker_oracle(D, a)
            if v == 0:
                return False
            res = a % d
            if res in values and values[res] != v:
                return False
            values[res] = v
        return -1 in values.values()

    for d in range(1, 40):
        for D in (-1, -2, -3, -5, -7, -15):
            assert is_reducible(d, D) == scan(d, D), (d, D)


def test_orbit_sets_examples():
    plus, minus = orbit_sets(7, -7)
    # quadratic residues mod 7 by exhaustive squaring: {1, 2, 4}
    assert {(x * x) % 7 for x in range(1, 7)} == {1, 2, 4}
    assert plus.members == (1, 2, 4)
    assert minus.members == (3, 5, 6)
    plus, minus = orbit_sets(8, -2)
    assert plus.members == (1, 3) and minus.members == (5, 7)
    plus, minus = orbit_sets(12, -1)
    # kronecker(-1, a) = +1 iff a = 1 mod 4
    assert plus.members == (1, 5) and minus.members == (7, 11)


def test_orbit_sets_sizes_and_one():
    for d in range(3, 101):
        for D in suitable_fields(d):
            plus, minus = orbit_sets(d, D)
            assert len(plus) == len(minus) == euler_phi(d) // 2
            assert 1 in plus.members
            assert set(plus.members) | set(minus.members) == set(units_mod(d))


def test_orbit_sets_error_when_irreducible():
    with pytest.raises(ValueError):
        orbit_sets(7, -5)


def test_plus_orbit_closed_under_multiplication():
    for d in range(3, 101):
        for D in suitable_fields(d):
            plus, _ = orbit_sets(d, D)
            members = set(plus.members)
            for a in members:
                for b in members:
                    assert (a * b) % d in members


def test_complex_conjugate_orbit():
    plus, minus = orbit_sets(7, -7)
    assert complex_conjugate_orbit(plus) == minus
    assert complex_conjugate_orbit(minus) == plus
    f = full_orbit(9)
    assert complex_conjugate_orbit(f) == f
    plus12, minus12 = orbit_sets(12, -1)
    assert complex_conjugate_orbit(plus12) == minus12
    # the swap happens for every split pair with d > 2
    for d in range(3, 80):
        for D in suitable_fields(d):
            p, m = orbit_sets(d, D)
            assert complex_conjugate_orbit(p) == m


def test_orbitset_validation():
    with pytest.raises(ValueError):
        OrbitSet(8, (1, 2), PLUS, -2)  # 2 is not a unit mod 8
    with pytest.raises(ValueError):
        OrbitSet(8, (1, 3), FULL, -2)  # FULL must not carry a field
    with pytest.raises(ValueError):
        OrbitSet(8, (1, 3), "HALF", -2)


def test_suitable_fields_examples():
    assert suitable_fields(4) == (-1,)
    assert suitable_fields(20) == (-1, -5)
    assert suitable_fields(7) == (-7,)
    assert suitable_fields(5) == ()
    assert suitable_fields(26) == ()
    assert suitable_fields(24) == (-1, -2, -3, -6)
    assert suitable_fields(12) == (-1, -3)


def test_suitable_fields_complete_by_scan():
    # every squarefree D with |D| <= 60 that splits must be listed
    for d in range(3, 61):
        listed = set(suitable_fields(d))
        for k in range(1, 61):
            D = -k
            from ballquot.qfield import is_squarefree
            if not is_squarefree(D):
                continue
            assert (D in listed) == is_reducible(d, D), (d, D)


def test_cyclotomic_polynomial():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # product over divisors reconstructs x^n - 1
    for n in (1, 2, 6, 12, 30):
        prod = [1]
        for e in range(1, n + 1):
            if n % e == 0:
                phi_e = cyclotomic_polynomial(e)
                out = [0] * (len(prod) + len(phi_e) - 1)
                for i, x in enumerate(prod):
                    for j, y in enumerate(phi_e):
                        out[i + j] += x * y
                prod = out
        assert prod == [-1] + [0] * (n - 1) + [1]
