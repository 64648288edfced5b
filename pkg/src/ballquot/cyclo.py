"""Multiplicative number theory behind the eigenvalue orbit decomposition.

The d-th cyclotomic polynomial splits over an imaginary quadratic field
Q(sqrt(D)) exactly when the field discriminant divides d; in that case the
primitive d-th roots of unity fall into two Kronecker-symbol orbits of size
phi(d)/2.  This module computes totients, factorizations, the Kronecker
symbol, the splitting test (with an independent character-based cross-check),
and the orbit sets consumed by the fractional-part minimizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Optional

from .qfield import is_squarefree, check_field_tag

FULL = "FULL"
PLUS = "PLUS"
MINUS = "MINUS"


class InternalCheckError(RuntimeError):
    """Two independent computations of the same quantity disagreed."""


def factorize(n: int):
    """Prime factorization of n >= 1 as a tuple of (prime, exponent), ascending."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi expects n >= 1")
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def phi_sieve(limit: int):
    """Totients of 0..limit; phi[0] = 0 by convention."""
    ph = list(range(limit + 1))
    for p in range(2, limit + 1):
        if ph[p] == p:
            for m in range(p, limit + 1, p):
                ph[m] -= ph[m] // p
    if limit >= 0:
        ph[0] = 0
    return ph


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) with the standard conventions at 2, -1 and 0."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    # factor out 2 from the bottom
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 == 1 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol by reciprocity for odd n > 0
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def field_discriminant(d_tag: int) -> int:
    """Discriminant of Q(sqrt(D)): D itself if D = 1 mod 4, else 4D."""
    check_field_tag(d_tag)
    return d_tag if d_tag % 4 == 1 else 4 * d_tag


def units_mod(d: int):
    """Residues mod d coprime to d.  For d = 1 this is (0,), the single class."""
    if d < 1:
        raise ValueError("units_mod expects d >= 1")
    return tuple(a for a in range(d) if gcd(a, d) == 1)


@lru_cache(maxsize=None)
def _character_defined_mod(d: int, d_tag: int) -> bool:
    """Scan test: is a -> kronecker(D, a) a nonvanishing character mod d?

    Checks constancy on residue classes over a in [1, 10d], nonvanishing on
    units, and nontriviality.
    """
    values = {}
    for a in range(1, 10 * d + 1):
        if gcd(a, d) != 1:
            continue
        v = kronecker(d_tag, a)
        if v == 0:
            return False
        res = a % d
        if res in values:
            if values[res] != v:
                return False
        else:
            values[res] = v
    return -1 in values.values()


@lru_cache(maxsize=None)
def is_reducible(d: int, d_tag: int) -> bool:
    """Does the d-th cyclotomic polynomial factor over Q(sqrt(D))?

    Criterion: the field discriminant divides d.  Cross-checked against the
    character scan; disagreement raises InternalCheckError.
    """
    if d < 1:
        raise ValueError("is_reducible expects d >= 1")
    check_field_tag(d_tag)
    by_conductor = d % abs(field_discriminant(d_tag)) == 0
    by_character = _character_defined_mod(d, d_tag)
    if by_conductor != by_character:
        raise InternalCheckError(
            f"reducibility criteria disagree for d={d}, D={d_tag}: "
            f"conductor={by_conductor}, character={by_character}"
        )
    return by_conductor


@dataclass(frozen=True)
class OrbitSet:
    """Exponents of one irreducible factor's set of primitive d-th roots."""

    d: int
    members: tuple
    label: str
    d_field: Optional[int] = None

    def __post_init__(self):
        if self.label not in (FULL, PLUS, MINUS):
            raise ValueError(f"bad orbit label {self.label!r}")
        if (self.d_field is None) != (self.label == FULL):
            raise ValueError("d_field must be set exactly for PLUS/MINUS orbits")
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("orbit members must be sorted and distinct")
        for a in self.members:
            if not (1 <= a < self.d) or gcd(a, self.d) != 1:
                raise ValueError(f"orbit member {a} is not a unit in [1, {self.d})")

    def __len__(self):
        return len(self.members)


def full_orbit(d: int) -> OrbitSet:
    if d < 3:
        raise ValueError("orbits are defined for d >= 3")
    return OrbitSet(d, tuple(a for a in units_mod(d) if a != 0), FULL)


def orbit_sets(d: int, d_tag: int):
    """The (PLUS, MINUS) Kronecker orbits for a reducible (d, D) pair."""
    if not is_reducible(d, d_tag):
        raise ValueError(f"no splitting: cyclotomic polynomial of order {d} "
                         f"is irreducible over Q(sqrt({d_tag}))")
    plus, minus = [], []
    for a in units_mod(d):
        (plus if kronecker(d_tag, a) == 1 else minus).append(a)
    if len(plus) != len(minus):
        raise InternalCheckError(f"unbalanced orbits for d={d}, D={d_tag}")
    return (
        OrbitSet(d, tuple(plus), PLUS, d_tag),
        OrbitSet(d, tuple(minus), MINUS, d_tag),
    )


def complex_conjugate_orbit(orbit: OrbitSet) -> OrbitSet:
    """The orbit containing {d - a : a in orbit}; for D < 0 the other one."""
    if orbit.label == FULL:
        return orbit
    negated = tuple(sorted((orbit.d - a) % orbit.d for a in orbit.members))
    plus, minus = orbit_sets(orbit.d, orbit.d_field)
    if negated == plus.members:
        return plus
    if negated == minus.members:
        return minus
    raise InternalCheckError("negated orbit is not a Kronecker orbit")


def suitable_fields(d: int):
    """All squarefree D < 0 whose quadratic field sits inside the d-th
    cyclotomic field, i.e. the splitting fields; ordered by |D|."""
    if d < 3:
        raise ValueError("suitable_fields expects d >= 3")
    out = []
    for f in range(3, d + 1):
        if d % f:
            continue
        delta = -f
        if delta % 4 == 1 and is_squarefree(delta):
            out.append(delta)
        elif delta % 4 == 0:
            quarter = delta // 4
            if is_squarefree(quarter) and quarter % 4 in (2, 3):
                out.append(quarter)
    result = tuple(sorted(set(out), key=abs))
    for d_tag in result:
        if not is_reducible(d, d_tag):
            raise InternalCheckError(f"suitable field {d_tag} fails reducibility for d={d}")
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int):
    """Integer coefficient tuple (low degree first) of the d-th cyclotomic
    polynomial, via exact division of x^d - 1 by the proper divisors' factors."""
    if d < 1:
        raise ValueError("cyclotomic_polynomial expects d >= 1")
    poly = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            poly = _poly_divide_exact(poly, cyclotomic_polynomial(e))
    return tuple(poly)


def _poly_divide_exact(num, den):
    """Exact division of integer polynomials, low degree first."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("inexact polynomial division")
        q = c // den[-1]
        out[k] = q
        if q:
            for i, dc in enumerate(den):
                num[k + i] -= q * dc
    if any(num):
        raise ArithmeticError("nonzero remainder in exact polynomial division")
    return out
