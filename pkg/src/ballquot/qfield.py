"""Exact arithmetic over imaginary quadratic fields.

Elements of Q(sqrt(D)), D < 0 squarefree, are stored as a pair of
``fractions.Fraction`` coordinates with respect to the basis (1, sqrt(D)),
together with the field tag D.  Matrices over such a field come with the
linear algebra needed elsewhere: hermitian adjoints, Gauss-Jordan inversion,
exact rank/kernel computations.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

RationalLike = Union[int, Fraction]


class FieldTagError(ValueError):
    """Raised when elements of distinct quadratic fields are combined."""


def is_squarefree(n: int) -> bool:
    """True iff |n| has no repeated prime factor (0 is not squarefree)."""
    n = abs(n)
    if n == 0:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        while n % p == 0:
            n //= p
        p += 1
    return True


def check_field_tag(d: int) -> int:
    if not isinstance(d, int) or d >= 0 or not is_squarefree(d):
        raise ValueError(f"field tag must be a squarefree negative integer, got {d!r}")
    return d


def frac(q: RationalLike) -> Fraction:
    """Fractional part q - floor(q), always in [0, 1)."""
    return Fraction(q) % 1


def fmt_rational(q: RationalLike) -> str:
    """Lowest-terms 'p/q' string, or plain 'n' for integers."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class QElem:
    """An element re + rt*sqrt(D) of the imaginary quadratic field Q(sqrt(D))."""

    d: int
    re: Fraction
    rt: Fraction

    def __post_init__(self):
        check_field_tag(self.d)
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "rt", Fraction(self.rt))

    # -- constructors ------------------------------------------------------

    @classmethod
    def of(cls, d: int, re: RationalLike = 0, rt: RationalLike = 0) -> "QElem":
        return cls(d, Fraction(re), Fraction(rt))

    @classmethod
    def zero(cls, d: int) -> "QElem":
        return cls.of(d)

    @classmethod
    def one(cls, d: int) -> "QElem":
        return cls.of(d, 1)

    @classmethod
    def sqrt_d(cls, d: int) -> "QElem":
        return cls.of(d, 0, 1)

    # -- helpers -----------------------------------------------------------

    def _coerce(self, other) -> "QElem":
        if isinstance(other, QElem):
            if other.d != self.d:
                raise FieldTagError(f"mixed field tags {self.d} and {other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return QElem.of(self.d, other)
        return NotImplemented

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.rt == 0

    @property
    def is_rational(self) -> bool:
        return self.rt == 0

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QElem(self.d, self.re + o.re, self.rt + o.rt)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QElem(self.d, self.re - o.re, self.rt - o.rt)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QElem(self.d, -self.re, -self.rt)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QElem(
            self.d,
            self.re * o.re + self.d * self.rt * o.rt,
            self.re * o.rt + self.rt * o.re,
        )

    __rmul__ = __mul__

    def conj(self) -> "QElem":
        return QElem(self.d, self.re, -self.rt)

    def norm(self) -> Fraction:
        """Field norm x * conj(x) = re^2 - D*rt^2; positive for x != 0."""
        return self.re * self.re - self.d * self.rt * self.rt

    def inverse(self) -> "QElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero element")
        return QElem(self.d, self.re / n, -self.rt / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QElem.one(self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __str__(self):
        if self.rt == 0:
            return fmt_rational(self.re)
        rt = fmt_rational(abs(self.rt))
        sign = "-" if self.rt < 0 else "+"
        head = "" if self.re == 0 and self.rt > 0 else fmt_rational(self.re) + sign
        if self.re == 0 and self.rt < 0:
            head = "-"
        return f"{head}{rt}*sqrt({self.d})"

    def to_obj(self):
        return {"re": fmt_rational(self.re), "rt": fmt_rational(self.rt), "D": self.d}

    @classmethod
    def from_obj(cls, obj) -> "QElem":
        return cls(int(obj["D"]), Fraction(obj["re"]), Fraction(obj["rt"]))


def conj(x: QElem) -> QElem:
    return x.conj()


def qinv(x: QElem) -> QElem:
    return x.inverse()


def in_ring_of_integers(x: QElem) -> bool:
    """Membership in the maximal order of Q(sqrt(D)).

    For D = 2, 3 mod 4 the order is Z[sqrt(D)]; for D = 1 mod 4 it is
    Z[(1 + sqrt(D)) / 2], i.e. 2*rt and re - rt must be rational integers.
    """
    if x.d % 4 == 1:
        return (2 * x.rt).denominator == 1 and (x.re - x.rt).denominator == 1
    return x.re.denominator == 1 and x.rt.denominator == 1


@dataclass(frozen=True)
class QMatrix:
    """Dense matrix over Q(sqrt(D)), row-major, immutable."""

    d: int
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        check_field_tag(self.d)
        if self.rows <= 0 or self.cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")
        for e in self.entries:
            if not isinstance(e, QElem):
                raise TypeError("entries must be QElem")
            if e.d != self.d:
                raise FieldTagError("entry field tag differs from matrix tag")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, d: int, rows: Sequence[Sequence]) -> "QMatrix":
        nr = len(rows)
        nc = len(rows[0])
        ents = []
        for row in rows:
            if len(row) != nc:
                raise ValueError("ragged rows")
            for e in row:
                ents.append(e if isinstance(e, QElem) else QElem.of(d, e))
        return cls(d, nr, nc, tuple(ents))

    @classmethod
    def identity(cls, d: int, n: int) -> "QMatrix":
        one, zero = QElem.one(d), QElem.zero(d)
        return cls(d, n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, d: int, rows: int, cols: int) -> "QMatrix":
        z = QElem.zero(d)
        return cls(d, rows, cols, (z,) * (rows * cols))

    @classmethod
    def column(cls, d: int, entries: Sequence) -> "QMatrix":
        return cls.from_rows(d, [[e] for e in entries])

    @classmethod
    def row(cls, d: int, entries: Sequence) -> "QMatrix":
        return cls.from_rows(d, [list(entries)])

    # -- access ------------------------------------------------------------

    def at(self, i: int, j: int) -> QElem:
        return self.entries[i * self.cols + j]

    def row_list(self, i: int) -> list:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def to_rows(self) -> list:
        return [self.row_list(i) for i in range(self.rows)]

    def submatrix(self, row0: int, col0: int, nrows: int, ncols: int) -> "QMatrix":
        rows = [
            [self.at(i, j) for j in range(col0, col0 + ncols)]
            for i in range(row0, row0 + nrows)
        ]
        return QMatrix.from_rows(self.d, rows)

    @property
    def is_scalar(self) -> bool:
        return self.rows == 1 and self.cols == 1

    def scalar(self) -> QElem:
        if not self.is_scalar:
            raise ValueError("not a 1x1 matrix")
        return self.entries[0]

    # -- arithmetic --------------------------------------------------------

    def _check_same_shape(self, other: "QMatrix"):
        if self.d != other.d:
            raise FieldTagError("mixed field tags in matrix arithmetic")
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._check_same_shape(other)
        return QMatrix(self.d, self.rows, self.cols,
                       tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._check_same_shape(other)
        return QMatrix(self.d, self.rows, self.cols,
                       tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "QMatrix":
        return QMatrix(self.d, self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "QMatrix":
        c = c if isinstance(c, QElem) else QElem.of(self.d, c)
        return QMatrix(self.d, self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.d != other.d:
            raise FieldTagError("mixed field tags in matrix product")
        if self.cols != other.rows:
            raise ValueError("inner dimension mismatch")
        zero = QElem.zero(self.d)
        out = []
        for i in range(self.rows):
            base = i * self.cols
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[base + k] * other.entries[k * other.cols + j]
                out.append(acc)
        return QMatrix(self.d, self.rows, other.cols, tuple(out))

    def hermitian_adjoint(self) -> "QMatrix":
        ents = tuple(self.at(j, i).conj() for i in range(self.cols) for j in range(self.rows))
        return QMatrix(self.d, self.cols, self.rows, ents)

    @property
    def h(self) -> "QMatrix":
        return self.hermitian_adjoint()

    def is_hermitian(self) -> bool:
        return self.rows == self.cols and self == self.hermitian_adjoint()

    def power(self, k: int) -> "QMatrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        out = QMatrix.identity(self.d, self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    # -- elimination -------------------------------------------------------

    def rank(self) -> int:
        work = [row[:] for row in self.to_rows()]
        nr, nc = self.rows, self.cols
        r = 0
        for c in range(nc):
            piv = next((i for i in range(r, nr) if not work[i][c].is_zero), None)
            if piv is None:
                continue
            work[r], work[piv] = work[piv], work[r]
            inv = work[r][c].inverse()
            work[r] = [inv * e for e in work[r]]
            for i in range(nr):
                if i != r and not work[i][c].is_zero:
                    f = work[i][c]
                    work[i] = [a - f * b for a, b in zip(work[i], work[r])]
            r += 1
            if r == nr:
                break
        return r

    def kernel_dimension(self) -> int:
        return self.cols - self.rank()

    def inverse(self) -> "QMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        work = [row + ident for row, ident in
                zip(self.to_rows(), QMatrix.identity(self.d, n).to_rows())]
        for c in range(n):
            piv = next((i for i in range(c, n) if not work[i][c].is_zero), None)
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            work[c], work[piv] = work[piv], work[c]
            inv = work[c][c].inverse()
            work[c] = [inv * e for e in work[c]]
            for i in range(n):
                if i != c and not work[i][c].is_zero:
                    f = work[i][c]
                    work[i] = [a - f * b for a, b in zip(work[i], work[c])]
        return QMatrix.from_rows(self.d, [row[n:] for row in work])

    def det(self) -> QElem:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        work = [row[:] for row in self.to_rows()]
        det = QElem.one(self.d)
        for c in range(n):
            piv = next((i for i in range(c, n) if not work[i][c].is_zero), None)
            if piv is None:
                return QElem.zero(self.d)
            if piv != c:
                work[c], work[piv] = work[piv], work[c]
                det = -det
            det = det * work[c][c]
            inv = work[c][c].inverse()
            work[c] = [inv * e for e in work[c]]
            for i in range(c + 1, n):
                if not work[i][c].is_zero:
                    f = work[i][c]
                    work[i] = [a - f * b for a, b in zip(work[i], work[c])]
        return det

    # -- serialization -----------------------------------------------------

    def to_obj(self):
        return {
            "D": self.d,
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str_pair(self.at(i, j)) for j in range(self.cols)]
                        for i in range(self.rows)],
        }

    @classmethod
    def from_obj(cls, obj) -> "QMatrix":
        d = int(obj["D"])
        rows = [
            [QElem(d, Fraction(re), Fraction(rt)) for re, rt in row]
            for row in obj["entries"]
        ]
        return cls.from_rows(d, rows)

    def __str__(self):
        return "[" + "; ".join(
            ", ".join(str(self.at(i, j)) for j in range(self.cols))
            for i in range(self.rows)
        ) + "]"


def str_pair(x: QElem):
    return [fmt_rational(x.re), fmt_rational(x.rt)]


def hermitian_adjoint(m: QMatrix) -> QMatrix:
    return m.hermitian_adjoint()


def block_matrix(d: int, blocks: Iterable[Iterable]) -> QMatrix:
    """Assemble a matrix from a grid of QMatrix blocks and scalar QElems.

    QElem entries are treated as 1x1 blocks; block shapes must tile.
    """
    rows_out = []
    for block_row in blocks:
        norm = [b if isinstance(b, QMatrix) else QMatrix.from_rows(d, [[b]])
                for b in block_row]
        height = norm[0].rows
        if any(b.rows != height for b in norm):
            raise ValueError("inconsistent block heights")
        for i in range(height):
            row = []
            for b in norm:
                row.extend(b.row_list(i))
            rows_out.append(row)
    widths = {len(r) for r in rows_out}
    if len(widths) != 1:
        raise ValueError("inconsistent block widths")
    return QMatrix.from_rows(d, rows_out)
