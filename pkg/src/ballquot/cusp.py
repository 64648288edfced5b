"""Exact algebra at a zero-dimensional boundary component.

A degenerate hermitian form on an isotropic flag is normalized to the
anti-diagonal block shape (0 0 a / 0 B 0 / conj(a) 0 0) with B positive
definite.  The stabiliser of the flag consists of block upper-triangular
matrices subject to four exact relations; inside it sit the unipotent
radical and its centre, whose integral points form a rank-one lattice with
an explicitly computable generator.  Everything is carried out over
Q(sqrt(D)) with exact rationals, including the eigenvalue exponents of the
induced action on the tangent space at a fixed boundary point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional

from .eigen import eigen_exponents
from .qfield import QElem, QMatrix, block_matrix
from .reidtai import EigenSystem


@dataclass(frozen=True)
class CuspFrame:
    """Normalized Gram data (a, B) of a signature-(n,1) form at the cusp."""

    n: int
    d: int
    a: QElem
    b_mat: QMatrix

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("frames need ambient dimension n >= 2")
        if self.a.d != self.d or self.b_mat.d != self.d:
            raise ValueError("field tags of frame data disagree")
        if self.a.is_zero:
            raise ValueError("the isotropic pairing entry a must be nonzero")
        if self.b_mat.rows != self.n - 1 or self.b_mat.cols != self.n - 1:
            raise ValueError("B must be (n-1) x (n-1)")
        if not self.b_mat.is_hermitian():
            raise ValueError("B must be hermitian")
        for k in range(1, self.n):
            minor = self.b_mat.submatrix(0, 0, k, k).det()
            if minor.rt != 0 or minor.re <= 0:
                raise ValueError("B must be positive definite")

    def q_matrix(self) -> QMatrix:
        """The assembled anti-diagonal hermitian form of signature (n, 1)."""
        d, n = self.d, self.n
        z_col = QMatrix.zero(d, n - 1, 1)
        z_row = QMatrix.zero(d, 1, n - 1)
        zero = QElem.zero(d)
        return block_matrix(d, [
            [zero, z_row, self.a],
            [z_col, self.b_mat, z_col],
            [self.a.conj(), z_row, zero],
        ])

    def to_obj(self):
        return {"n": self.n, "D": self.d, "a": self.a.to_obj(),
                "B": self.b_mat.to_obj()}

    @classmethod
    def from_obj(cls, obj) -> "CuspFrame":
        return cls(int(obj["n"]), int(obj["D"]), QElem.from_obj(obj["a"]),
                   QMatrix.from_obj(obj["B"]))


@dataclass(frozen=True)
class BoundaryElement:
    """Block upper-triangular element (u v w / 0 X y / 0 0 z)."""

    u: QElem
    v: QMatrix  # 1 x (n-1)
    w: QElem
    x_mat: QMatrix  # (n-1) x (n-1)
    y: QMatrix  # (n-1) x 1
    z: QElem

    def __post_init__(self):
        d = self.u.d
        if any(t.d != d for t in (self.v, self.w, self.x_mat, self.y, self.z)):
            raise ValueError("field tags of element blocks disagree")
        m = self.x_mat.rows
        if self.x_mat.cols != m or self.v.rows != 1 or self.v.cols != m \
                or self.y.rows != m or self.y.cols != 1:
            raise ValueError("inconsistent block shapes")

    @property
    def d(self) -> int:
        return self.u.d

    @property
    def size(self) -> int:
        return self.x_mat.rows + 2

    def assemble(self) -> QMatrix:
        d = self.d
        m = self.x_mat.rows
        return block_matrix(d, [
            [self.u, self.v, self.w],
            [QMatrix.zero(d, m, 1), self.x_mat, self.y],
            [QElem.zero(d), QMatrix.zero(d, 1, m), self.z],
        ])

    @classmethod
    def from_matrix(cls, mat: QMatrix) -> "BoundaryElement":
        npl = mat.rows
        if mat.cols != npl or npl < 3:
            raise ValueError("boundary elements are square of size >= 3")
        m = npl - 2
        for i in range(1, npl):
            if not mat.at(i, 0).is_zero:
                raise ValueError("matrix is not block upper-triangular")
        for j in range(npl - 1):
            if not mat.at(npl - 1, j).is_zero:
                raise ValueError("matrix is not block upper-triangular")
        return cls(
            u=mat.at(0, 0),
            v=mat.submatrix(0, 1, 1, m),
            w=mat.at(0, npl - 1),
            x_mat=mat.submatrix(1, 1, m, m),
            y=mat.submatrix(1, npl - 1, m, 1),
            z=mat.at(npl - 1, npl - 1),
        )

    def compose(self, other: "BoundaryElement") -> "BoundaryElement":
        return BoundaryElement.from_matrix(self.assemble() @ other.assemble())

    def inverse(self) -> "BoundaryElement":
        return BoundaryElement.from_matrix(self.assemble().inverse())

    def __neg__(self) -> "BoundaryElement":
        return BoundaryElement(-self.u, -self.v, -self.w, -self.x_mat,
                               -self.y, -self.z)

    def to_obj(self):
        return {"u": self.u.to_obj(), "v": self.v.to_obj(), "w": self.w.to_obj(),
                "X": self.x_mat.to_obj(), "y": self.y.to_obj(), "z": self.z.to_obj()}

    @classmethod
    def from_obj(cls, obj) -> "BoundaryElement":
        return cls(QElem.from_obj(obj["u"]), QMatrix.from_obj(obj["v"]),
                   QElem.from_obj(obj["w"]), QMatrix.from_obj(obj["X"]),
                   QMatrix.from_obj(obj["y"]), QElem.from_obj(obj["z"]))


@dataclass(frozen=True)
class BoundaryPoint:
    """Chart coordinates (alpha, w) near the cusp; at_infinity marks the
    boundary stratum where the torus coordinate vanishes."""

    alpha: QElem
    wvec: QMatrix  # (n-1) x 1
    at_infinity: bool = False


# ---------------------------------------------------------------------------
# normalization


def normalize_cusp_basis(qprime: QMatrix, n: int):
    """Basis change moving a flag-compatible hermitian matrix to the
    anti-diagonal block shape.

    The input must be hermitian of size n+1 with first row (0, ..., 0, a),
    a != 0.  Returns (N, frame) where N is unimodular over the field,
    N^H Q' N has exact anti-diagonal blocks and the corner entry is 0.
    """
    d = qprime.d
    if qprime.rows != n + 1 or qprime.cols != n + 1:
        raise ValueError("Q' must be (n+1) x (n+1)")
    if not qprime.is_hermitian():
        raise ValueError("Q' must be hermitian")
    for j in range(n):
        if not qprime.at(0, j).is_zero:
            raise ValueError("Q' lacks the isotropic zero pattern in its first row")
    a = qprime.at(0, n)
    if a.is_zero:
        raise ValueError("degenerate form: pairing entry a vanishes")
    b = qprime.submatrix(1, 1, n - 1, n - 1)
    c = qprime.submatrix(1, n, n - 1, 1)
    dd = qprime.at(n, n)
    try:
        b_inv = b.inverse()
    except ZeroDivisionError:
        raise ValueError("middle block B is singular") from None
    r = -(b_inv @ c)
    # the unique r' making the corner vanish with conj(a) * r' real
    chc = (c.h @ b_inv @ c).scalar()
    r_prime = (dd - chc) * QElem.of(d, Fraction(-1, 2)) * a.conj().inverse()
    m = n - 1
    n_mat = block_matrix(d, [
        [QElem.one(d), QMatrix.zero(d, 1, m), r_prime],
        [QMatrix.zero(d, m, 1), QMatrix.identity(d, m), r],
        [QElem.zero(d), QMatrix.zero(d, 1, m), QElem.one(d)],
    ])
    frame = CuspFrame(n, d, a, b)
    result = n_mat.h @ qprime @ n_mat
    if result != frame.q_matrix():
        raise ArithmeticError("normalization failed to reach the block shape")
    return n_mat, frame


# ---------------------------------------------------------------------------
# membership

def _real_part_vanishes(a: QElem, w: QElem) -> bool:
    """conj(a)*w + a*conj(w) == 0, the purely imaginary direction along a."""
    val = a.conj() * w + a * w.conj()
    return val.is_zero


def is_in_NF(g: BoundaryElement, frame: CuspFrame) -> bool:
    """The four stabiliser relations, checked exactly."""
    if g.size != frame.n + 1 or g.d != frame.d:
        raise ValueError("element size or field does not match the frame")
    b = frame.b_mat
    a = frame.a
    one = QElem.one(frame.d)
    if g.z * g.u.conj() != one:
        return False
    x = g.x_mat
    if x.h @ b @ x != b:
        return False
    vec = x.h @ b @ g.y + (g.v.h).scale(a * g.z)
    if any(not e.is_zero for e in vec.entries):
        return False
    scal = (g.y.h @ b @ g.y).scalar() \
        + g.z.conj() * a.conj() * g.w + g.z * a * g.w.conj()
    return scal.is_zero


def is_in_WF(g: BoundaryElement, frame: CuspFrame) -> bool:
    """Unipotent radical: u = z = 1, X = I, plus two displayed relations."""
    if g.size != frame.n + 1 or g.d != frame.d:
        raise ValueError("element size or field does not match the frame")
    d = frame.d
    one = QElem.one(d)
    if g.u != one or g.z != one:
        return False
    if g.x_mat != QMatrix.identity(d, frame.n - 1):
        return False
    vec = frame.b_mat @ g.y + (g.v.h).scale(frame.a)
    if any(not e.is_zero for e in vec.entries):
        return False
    scal = (g.y.h @ frame.b_mat @ g.y).scalar() \
        + frame.a.conj() * g.w + frame.a * g.w.conj()
    return scal.is_zero


def is_in_UF(g: BoundaryElement, frame: CuspFrame) -> bool:
    """Centre of the radical: v = y = 0 and w purely imaginary along a."""
    if not is_in_WF(g, frame):
        return False
    if any(not e.is_zero for e in g.v.entries):
        return False
    if any(not e.is_zero for e in g.y.entries):
        return False
    return _real_part_vanishes(frame.a, g.w)


# ---------------------------------------------------------------------------
# the integral lattice in the centre


def _lcm_fractions(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(lcm(a.numerator, b.numerator), gcd(a.denominator, b.denominator))


def uf_lattice_generator(a: QElem, d_tag: int) -> Fraction:
    """Positive generator x0 of {x in Q : x * a * sqrt(D) is integral}.

    The centre's integral points are the translations by x * a * sqrt(D)
    with x in x0 * Z; the lattice period is sigma = x0 * a * sqrt(D).
    Both congruence classes of D mod 4 are handled from the ring-membership
    conditions; vanishing coordinates of a simply drop their condition.
    """
    if a.d != d_tag:
        raise ValueError("field tag mismatch")
    if a.is_zero:
        raise ValueError("a must be nonzero")
    e, f = a.re, a.rt
    # x * a * sqrt(D) = (f*D*x) + (e*x) * sqrt(D)
    if d_tag % 4 == 1:
        # membership needs 2*rt and re - rt integral
        coeffs = [2 * e, f * d_tag - e]
    else:
        coeffs = [f * d_tag, e]
    gen: Optional[Fraction] = None
    for c in coeffs:
        if c == 0:
            continue
        g = Fraction(c.denominator, abs(c.numerator))
        gen = g if gen is None else _lcm_fractions(gen, g)
    assert gen is not None  # a != 0 rules out all-zero coefficients
    return gen


def sigma_element(frame: CuspFrame, x0: Optional[Fraction] = None) -> QElem:
    """The lattice period sigma = x0 * a * sqrt(D) as a field element."""
    if x0 is None:
        x0 = uf_lattice_generator(frame.a, frame.d)
    return frame.a * QElem.sqrt_d(frame.d) * QElem.of(frame.d, x0)


def in_sigma_lattice(value: QElem, frame: CuspFrame,
                     x0: Optional[Fraction] = None) -> bool:
    """Is value an integer multiple of the lattice period?"""
    q = value / sigma_element(frame, x0)
    return q.rt == 0 and q.re.denominator == 1


def uf_translation(frame: CuspFrame, x: Fraction) -> BoundaryElement:
    """The central element translating the torus coordinate by x*a*sqrt(D)."""
    d, m = frame.d, frame.n - 1
    w = frame.a * QElem.sqrt_d(d) * QElem.of(d, x)
    return BoundaryElement(
        u=QElem.one(d), v=QMatrix.zero(d, 1, m), w=w,
        x_mat=QMatrix.identity(d, m), y=QMatrix.zero(d, m, 1), z=QElem.one(d),
    )


# ---------------------------------------------------------------------------
# the action


def apply_boundary_action(g: BoundaryElement, pt: BoundaryPoint,
                          frame: CuspFrame) -> BoundaryPoint:
    """Chart action alpha -> (alpha / conj(z) + v.w + w)/z, w -> (Xw + y)/z."""
    if pt.at_infinity:
        raise ValueError("finite-chart action needs a finite point")
    if not is_in_NF(g, frame):
        raise ValueError("element is not in the cusp stabiliser")
    zinv = g.z.inverse()
    alpha = zinv * (pt.alpha * g.z.conj().inverse()
                    + (g.v @ pt.wvec).scalar() + g.w)
    wnew = (g.x_mat @ pt.wvec + g.y).scale(zinv)
    return BoundaryPoint(alpha, wnew, False)


def divisor_action(g: BoundaryElement, wvec: QMatrix) -> QMatrix:
    """Action on the boundary stratum: w -> (Xw + y)/z."""
    return (g.x_mat @ wvec + g.y).scale(g.z.inverse())


def normalize_sign(g: BoundaryElement) -> BoundaryElement:
    """Replace g by -g when z = -1 (the overall sign acts trivially)."""
    d = g.d
    if g.z == QElem.one(d):
        return g
    if g.z == -QElem.one(d):
        return -g
    raise ValueError("scaling entry z must be a real unit +-1")


def fixes_boundary_point(g: BoundaryElement, w0: QMatrix) -> bool:
    g = normalize_sign(g)
    return g.x_mat @ w0 + g.y == w0


def boundary_tangent_exponents(g: BoundaryElement, w0: QMatrix,
                               frame: CuspFrame, sigma_gen: Fraction,
                               max_order: int = 1000) -> EigenSystem:
    """Eigenvalue exponents of the tangent action at a fixed boundary point.

    The torus direction contributes the rational exponent t / sigma where
    t = v.w0 + w; the remaining directions carry the exponents of X.  The
    element must have z = +-1 and fix (0, w0); non-torsion translation parts
    raise ValueError.
    """
    if not is_in_NF(g, frame):
        raise ValueError("element is not in the cusp stabiliser")
    g = normalize_sign(g)
    if g.x_mat @ w0 + g.y != w0:
        raise ValueError("element does not fix the boundary point")
    t = (g.v @ w0).scalar() + g.w
    q = t / sigma_element(frame, sigma_gen)
    if q.rt != 0:
        raise ValueError("non-torsion boundary element: torus shift is not "
                         "a rational multiple of the period")
    tau = q.re % 1
    es_x = eigen_exponents(g.x_mat, max_order=max_order)
    m = lcm(tau.denominator, es_x.order)
    exps = [int(tau * m)]
    exps.extend(a * (m // es_x.order) for a in es_x.exponents)
    return EigenSystem(m, tuple(exps))


def check_qr_congruences(g: BoundaryElement, frame: CuspFrame,
                         sigma_gen: Fraction) -> bool:
    """For a 2-torsion element modulo the centre: v + vX = 0, Xy + y = 0,
    and 2w + v.y = 0 modulo the sigma lattice, all exact."""
    if not is_in_NF(g, frame):
        raise ValueError("element is not in the cusp stabiliser")
    g = normalize_sign(g)
    ident = QMatrix.identity(g.d, frame.n - 1)
    if g.x_mat @ g.x_mat != ident:
        raise ValueError("square of the element is not unipotent-central")
    rel1 = all(e.is_zero for e in (g.v + g.v @ g.x_mat).entries)
    rel2 = all(e.is_zero for e in (g.x_mat @ g.y + g.y).entries)
    corner = 2 * g.w + (g.v @ g.y).scalar()
    rel3 = in_sigma_lattice(corner, frame, sigma_gen)
    return rel1 and rel2 and rel3


def boundary_divisor_fixed(g: BoundaryElement, frame: CuspFrame) -> bool:
    """Does g fix the boundary stratum pointwise?

    Elements that are trivial modulo the centre are rejected; for the
    remaining ones pointwise fixing would need X = I and y = 0.
    """
    if not is_in_NF(g, frame):
        raise ValueError("element is not in the cusp stabiliser")
    g = normalize_sign(g)
    ident = QMatrix.identity(g.d, frame.n - 1)
    trivial = (g.x_mat == ident
               and all(e.is_zero for e in g.y.entries)
               and all(e.is_zero for e in g.v.entries))
    if trivial:
        raise ValueError("element is trivial modulo the centre")
    return g.x_mat == ident and all(e.is_zero for e in g.y.entries)


# ---------------------------------------------------------------------------
# random instances for the property sweeps


def random_rational(rng, max_num: int = 4, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def random_qelem(rng, d_tag: int, max_num: int = 4, max_den: int = 3,
                 nonzero: bool = False) -> QElem:
    while True:
        x = QElem(d_tag, random_rational(rng, max_num, max_den),
                  random_rational(rng, max_num, max_den))
        if not nonzero or not x.is_zero:
            return x


def random_vector(rng, d_tag: int, m: int, **kw) -> QMatrix:
    return QMatrix.column(d_tag, [random_qelem(rng, d_tag, **kw) for _ in range(m)])


def random_frame(rng, d_tag: int, n: int) -> CuspFrame:
    """A random frame: B = R^H R for random nonsingular R, random a != 0."""
    m = n - 1
    while True:
        r = QMatrix.from_rows(
            d_tag,
            [[random_qelem(rng, d_tag, 2, 2) for _ in range(m)] for _ in range(m)],
        )
        if not r.det().is_zero:
            break
    b = r.h @ r
    a = random_qelem(rng, d_tag, 3, 2, nonzero=True)
    return CuspFrame(n, d_tag, a, b)


def random_b_unitary(rng, frame: CuspFrame) -> QMatrix:
    """Exact isometry of B via the Cayley transform of a B-skew matrix."""
    d, m = frame.d, frame.n - 1
    ident = QMatrix.identity(d, m)
    while True:
        ents = [[QElem.zero(d)] * m for _ in range(m)]
        for i in range(m):
            ents[i][i] = QElem(d, Fraction(0), random_rational(rng, 2, 2))
            for j in range(i + 1, m):
                x = random_qelem(rng, d, 2, 2)
                ents[i][j] = x
                ents[j][i] = -x.conj()
        k = QMatrix.from_rows(d, ents)  # skew-hermitian
        s = frame.b_mat.inverse() @ k
        try:
            x_mat = (ident - s) @ (ident + s).inverse()
        except ZeroDivisionError:
            continue
        return x_mat


def random_b_reflection_vectors(rng, frame: CuspFrame, count: int):
    """B-orthogonal anisotropic vectors spanning the -1 eigenspace."""
    d, m = frame.d, frame.n - 1
    vecs = []
    while len(vecs) < count:
        c = random_vector(rng, d, m, max_num=2, max_den=1)
        # B-orthogonalize against the chosen ones
        for prev in vecs:
            coeff = (prev.h @ frame.b_mat @ c).scalar() \
                / (prev.h @ frame.b_mat @ prev).scalar()
            c = c - prev.scale(coeff)
        norm = (c.h @ frame.b_mat @ c).scalar()
        if not norm.is_zero:
            vecs.append(c)
    return vecs


def involution_from_vectors(frame: CuspFrame, vecs) -> QMatrix:
    """Product of B-reflections in mutually B-orthogonal vectors."""
    d, m = frame.d, frame.n - 1
    x_mat = QMatrix.identity(d, m)
    for c in vecs:
        norm = (c.h @ frame.b_mat @ c).scalar()
        refl = QMatrix.identity(d, m) - (c @ (c.h @ frame.b_mat)).scale(
            QElem.of(d, 2) * norm.inverse())
        x_mat = x_mat @ refl
    return x_mat


def nf_element(frame: CuspFrame, x_mat: QMatrix, y: QMatrix, z: QElem,
               w_shift: Fraction) -> BoundaryElement:
    """Assemble the stabiliser element with the given unitary part, column y
    and torus parameter, solving the two remaining relations exactly."""
    d = frame.d
    a = frame.a
    v = -(y.h @ frame.b_mat @ x_mat).scale((z.conj() * a.conj()).inverse())
    beta = (y.h @ frame.b_mat @ y).scalar()
    w = beta * QElem.of(d, Fraction(-1, 2)) * (z.conj() * a.conj()).inverse() \
        + z * a * QElem.sqrt_d(d) * QElem.of(d, w_shift)
    u = z.conj().inverse()
    return BoundaryElement(u=u, v=v, w=w, x_mat=x_mat, y=y, z=z)


def random_nf_element(rng, frame: CuspFrame) -> BoundaryElement:
    z = QElem.of(frame.d, rng.choice((1, -1)))
    x_mat = random_b_unitary(rng, frame)
    y = random_vector(rng, frame.d, frame.n - 1, max_num=2, max_den=2)
    return nf_element(frame, x_mat, y, z, random_rational(rng, 3, 2))


def random_wf_element(rng, frame: CuspFrame) -> BoundaryElement:
    ident = QMatrix.identity(frame.d, frame.n - 1)
    y = random_vector(rng, frame.d, frame.n - 1, max_num=2, max_den=2)
    return nf_element(frame, ident, y, QElem.one(frame.d),
                      random_rational(rng, 3, 2))


def random_uf_element(rng, frame: CuspFrame) -> BoundaryElement:
    return uf_translation(frame, random_rational(rng, 3, 2))


@dataclass(frozen=True)
class Order2Instance:
    """A 2-torsion-mod-centre stabiliser element and a boundary point it
    fixes, together with the lattice generator."""

    element: BoundaryElement
    fixed_point: QMatrix
    sigma_gen: Fraction
    reflections: int


def random_order2_element(rng, frame: CuspFrame,
                          reflections: Optional[int] = None) -> Order2Instance:
    """Construct g with g^2 in the integral centre, plus a fixed point.

    X is a product of B-reflections, y lies in the (-1)-eigenspace, and the
    torus parameter is a half-integral multiple of the lattice generator, so
    that the square lands in the integral centre exactly.
    """
    d, m = frame.d, frame.n - 1
    x0 = uf_lattice_generator(frame.a, frame.d)
    k = reflections if reflections is not None else rng.randint(1, m)
    vecs = random_b_reflection_vectors(rng, frame, k)
    x_mat = involution_from_vectors(frame, vecs)
    lam = [random_rational(rng, 2, 2) for _ in range(k)]
    y = QMatrix.zero(d, m, 1)
    for coeff, c in zip(lam, vecs):
        y = y + c.scale(QElem.of(d, coeff))
    j = rng.randint(-3, 3)
    g = nf_element(frame, x_mat, y, QElem.one(d), Fraction(j, 2) * x0)
    # fixed point: w0 = y/2 plus anything B-orthogonal to the reflection span
    w0 = y.scale(QElem.of(d, Fraction(1, 2)))
    t = random_vector(rng, d, m, max_num=2, max_den=1)
    for c in vecs:
        coeff = (c.h @ frame.b_mat @ t).scalar() / (c.h @ frame.b_mat @ c).scalar()
        t = t - c.scale(coeff)
    w0 = w0 + t
    if rng.choice((False, True)):
        g = -g  # the overall sign acts trivially; exercises z = -1 handling
    return Order2Instance(g, w0, x0, k)
