"""Exact eigenvalue exponents of finite-order matrices over Q(sqrt(D)).

A matrix of finite order m is diagonalizable with root-of-unity eigenvalues.
For each divisor e of m, the kernel dimension of the e-th cyclotomic factor
evaluated at the matrix counts the primitive e-th-root eigenvalues.  When the
factor splits over the field, the two halves are separated by computing the
half-factor exactly: the quadratic Gauss sum realizes sqrt(D) inside the
cyclotomic algebra, and a polynomial gcd then cuts out the orbit whose roots
carry Kronecker symbol +1.  No numerical eigensolver is ever involved.
"""

from __future__ import annotations

from typing import List

from . import cyclo
from .cyclo import InternalCheckError, cyclotomic_polynomial, is_reducible, kronecker
from .qfield import QElem, QMatrix
from .reidtai import EigenSystem

# -- polynomials over Q(sqrt(D)), dense lists, low degree first -------------


def _ptrim(p: List[QElem]) -> List[QElem]:
    while len(p) > 1 and p[-1].is_zero:
        p.pop()
    return p


def _pfrom_ints(d_tag: int, coeffs) -> List[QElem]:
    return _ptrim([QElem.of(d_tag, c) for c in coeffs])


def _pis_zero(p: List[QElem]) -> bool:
    return all(c.is_zero for c in p)


def _psub(a: List[QElem], b: List[QElem]) -> List[QElem]:
    n = max(len(a), len(b))
    z = QElem.zero(a[0].d)
    out = [(a[i] if i < len(a) else z) - (b[i] if i < len(b) else z) for i in range(n)]
    return _ptrim(out)


def _pscale(p: List[QElem], c: QElem) -> List[QElem]:
    return _ptrim([c * x for x in p])


def _pmod(a: List[QElem], b: List[QElem]) -> List[QElem]:
    """Remainder of a by b, b nonzero."""
    a = a[:]
    lead_inv = b[-1].inverse()
    while len(a) >= len(b) and not _pis_zero(a):
        q = a[-1] * lead_inv
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = a[shift + i] - q * bc
        a = _ptrim(a)
        if len(a) < len(b) or _pis_zero(a):
            break
    return a


def _pgcd_monic(a: List[QElem], b: List[QElem]) -> List[QElem]:
    while not _pis_zero(b):
        a, b = b, _pmod(a, b)
    return _pscale(a, a[-1].inverse())


def _pat_matrix(p: List[QElem], m: QMatrix) -> QMatrix:
    """Evaluate the polynomial at a square matrix (Horner)."""
    n = m.rows
    acc = QMatrix.identity(m.d, n).scale(p[-1])
    for c in reversed(p[:-1]):
        acc = acc @ m
        acc = acc + QMatrix.identity(m.d, n).scale(c)
    return acc


# -- half-factors of split cyclotomic polynomials ----------------------------


def _zreduce(poly, phi_poly):
    """Reduce an integer polynomial modulo the monic integer polynomial."""
    out = list(poly)
    deg = len(phi_poly) - 1
    for k in range(len(out) - 1, deg - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            for i in range(deg):
                out[k - deg + i] -= c * phi_poly[i]
    out = out[:deg] + [0] * max(0, deg - len(out))
    return out[:deg]


def split_half_factor(d: int, d_tag: int) -> List[QElem]:
    """The monic factor of the d-th cyclotomic polynomial over Q(sqrt(D))
    whose roots are the primitive roots zeta_d^a with kronecker(D, a) = +1.

    The Gauss sum g = sum chi(b) zeta^{b d/|disc|} satisfies g = sqrt(disc)
    under the principal embedding, so gcd(Phi_d, g(T) - c*sqrt(D)) with
    c = sqrt(disc/D) isolates the +1 orbit.
    """
    if not is_reducible(d, d_tag):
        raise ValueError(f"({d}, {d_tag}) does not split")
    disc = cyclo.field_discriminant(d_tag)
    f = abs(disc)
    phi_poly = list(cyclotomic_polynomial(d))
    deg = len(phi_poly) - 1
    step = d // f
    gauss = [0] * deg
    for b in range(1, f):
        ch = kronecker(disc, b)
        if ch == 0:
            continue
        red = _zreduce([0] * ((b * step) % d) + [1], phi_poly)
        for i, v in enumerate(red):
            gauss[i] += ch * v
    scale = 1 if disc == d_tag else 2  # sqrt(disc) = scale * sqrt(D)
    target = _pfrom_ints(d_tag, gauss)
    target = _psub(target, [QElem.of(d_tag, 0, scale)])
    phi_q = _pfrom_ints(d_tag, phi_poly)
    half = _pgcd_monic(phi_q, target)
    if len(half) - 1 != deg // 2:
        raise InternalCheckError(
            f"half factor of Phi_{d} over Q(sqrt({d_tag})) has wrong degree"
        )
    return half


# -- eigen exponent extraction ----------------------------------------------


def matrix_order(m: QMatrix, max_order: int = 1000) -> int:
    if m.rows != m.cols:
        raise ValueError("order of a non-square matrix")
    ident = QMatrix.identity(m.d, m.rows)
    acc = m
    for k in range(1, max_order + 1):
        if acc == ident:
            return k
        acc = acc @ m
    raise ValueError(f"matrix order exceeds {max_order}; not torsion?")


def eigen_exponents(m: QMatrix, max_order: int = 1000) -> EigenSystem:
    """EigenSystem of a finite-order matrix, computed exactly.

    For each divisor e of the order, the multiplicity of the primitive
    e-th-root eigenvalues is a kernel dimension; split factors are refined
    into their two Kronecker orbits via the half-factor.
    """
    order = matrix_order(m, max_order)
    exponents: List[int] = []
    total = 0
    for e in range(1, order + 1):
        if order % e:
            continue
        phi_e = _pfrom_ints(m.d, cyclotomic_polynomial(e))
        dim_e = _pat_matrix(phi_e, m).kernel_dimension()
        if dim_e == 0:
            continue
        total += dim_e
        if e >= 3 and is_reducible(e, m.d):
            half = split_half_factor(e, m.d)
            dim_plus = _pat_matrix(half, m).kernel_dimension()
            dim_minus = dim_e - dim_plus
            plus, minus = cyclo.orbit_sets(e, m.d)
            for orbit, dim in ((plus, dim_plus), (minus, dim_minus)):
                if dim == 0:
                    continue
                mult, rem = divmod(dim, len(orbit.members))
                if rem:
                    raise InternalCheckError(
                        f"orbit multiplicity of Phi_{e} half is not integral"
                    )
                for a in orbit.members:
                    exponents.extend([a * (order // e)] * mult)
        else:
            units = list(cyclo.units_mod(e))
            mult, rem = divmod(dim_e, len(units))
            if rem:
                raise InternalCheckError(
                    f"eigenvalue multiplicity of Phi_{e} is not integral"
                )
            for a in units:
                exponents.extend([a * (order // e)] * mult)
    if total != m.rows:
        raise InternalCheckError("eigenvalue multiplicities do not fill the space")
    return EigenSystem(order, tuple(sorted(exponents)))
