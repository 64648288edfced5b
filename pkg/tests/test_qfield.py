import random
from fractions import Fraction as F

import pytest

from ballquot.qfield import (FieldTagError, QElem, QMatrix, block_matrix,
                             conj, fmt_rational, frac, hermitian_adjoint,
                             in_ring_of_integers, is_squarefree, qinv)

FIELDS = (-1, -2, -3, -5, -6, -7, -11, -15)


def rand_elem(rng, d):
    return QElem(d, F(rng.randint(-6, 6), rng.randint(1, 4)),
                 F(rng.randint(-6, 6), rng.randint(1, 4)))


# ---------------------------------------------------------------------------
# fractional part and formatting

def test_frac_examples():
    assert frac(F(7, 3)) == F(1, 3)
    assert frac(F(-1, 4)) == F(3, 4)
    assert frac(2) == 0


def test_frac_range():
    rng = random.Random(0)
    for _ in range(200):
        q = F(rng.randint(-50, 50), rng.randint(1, 20))
        f = frac(q)
        assert 0 <= f < 1
        assert (q - f).denominator == 1


def test_fmt_rational():
    assert fmt_rational(F(11, 15)) == "11/15"
    assert fmt_rational(F(4, 2)) == "2"
    assert fmt_rational(F(-1, 4)) == "-1/4"


def test_is_squarefree():
    assert is_squarefree(-5) and is_squarefree(30) and is_squarefree(-1)
    assert not is_squarefree(12) and not is_squarefree(-4) and not is_squarefree(0)


# ---------------------------------------------------------------------------
# element arithmetic

def test_construction_rejects_bad_tags():
    for bad in (0, 5, -4, -12):
        with pytest.raises(ValueError):
            QElem.of(bad, 1)


def test_mixed_tags_error():
    x = QElem.of(-5, 1)
    y = QElem.of(-7, 1)
    with pytest.raises(FieldTagError):
        x + y
    with pytest.raises(FieldTagError):
        x * y


def test_conj_examples():
    assert conj(QElem.of(-5, 3, 2)) == QElem.of(-5, 3, -2)
    assert conj(QElem.of(-5, 4)) == QElem.of(-5, 4)
    assert conj(QElem.of(-3, F(1, 2), F(1, 2))) == QElem.of(-3, F(1, 2), F(-1, 2))


def test_conj_is_ring_automorphism():
    rng = random.Random(1)
    for _ in range(100):
        d = rng.choice(FIELDS)
        x, y = rand_elem(rng, d), rand_elem(rng, d)
        assert conj(conj(x)) == x
        assert conj(x * y) == conj(x) * conj(y)
        assert conj(x + y) == conj(x) + conj(y)


def test_qinv_examples():
    x = QElem.of(-1, 1, 1)
    assert qinv(x) == QElem.of(-1, F(1, 2), F(-1, 2))
    assert x * qinv(x) == QElem.one(-1)
    assert qinv(QElem.of(-5, -1)) == QElem.of(-5, -1)
    y = QElem.of(-5, 0, 1)
    assert qinv(y) == QElem.of(-5, 0, F(-1, 5))
    assert y * qinv(y) == QElem.one(-5)


def test_qinv_zero_raises():
    with pytest.raises(ZeroDivisionError):
        qinv(QElem.zero(-5))


def test_field_axioms_random():
    rng = random.Random(2)
    for _ in range(150):
        d = rng.choice(FIELDS)
        x, y, z = (rand_elem(rng, d) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x and x * y == y * x
        if not x.is_zero:
            assert x * x.inverse() == QElem.one(d)


def test_norm_positive():
    rng = random.Random(3)
    for _ in range(100):
        x = rand_elem(rng, rng.choice(FIELDS))
        if not x.is_zero:
            assert x.norm() > 0


def test_powers():
    i = QElem.sqrt_d(-1)
    assert i ** 2 == QElem.of(-1, -1)
    assert i ** 4 == QElem.one(-1)
    assert i ** -1 == -i


# ---------------------------------------------------------------------------
# ring of integers

def test_in_ring_examples():
    assert in_ring_of_integers(QElem.of(-3, F(1, 2), F(1, 2)))
    assert not in_ring_of_integers(QElem.of(-5, F(1, 2), F(1, 2)))
    assert in_ring_of_integers(QElem.of(-2, 3, -2))


def test_in_ring_trace_norm_oracle():
    # x is integral iff trace(x) = 2*re and norm(x) are both integers
    rng = random.Random(4)
    for _ in range(400):
        x = rand_elem(rng, rng.choice(FIELDS))
        oracle = (2 * x.re).denominator == 1 and x.norm().denominator == 1
        assert in_ring_of_integers(x) == oracle


def test_in_ring_closure():
    rng = random.Random(5)
    for d in FIELDS:
        ints = []
        while len(ints) < 10:
            x = rand_elem(rng, d)
            if in_ring_of_integers(x):
                ints.append(x)
        for x in ints:
            for y in ints:
                assert in_ring_of_integers(x + y)
                assert in_ring_of_integers(x * y)


# ---------------------------------------------------------------------------
# matrices

def test_hermitian_adjoint_examples():
    ident = QMatrix.identity(-5, 3)
    assert hermitian_adjoint(ident) == ident
    row = QMatrix.row(-1, [QElem.sqrt_d(-1), QElem.one(-1)])
    col = hermitian_adjoint(row)
    assert col.rows == 2 and col.cols == 1
    assert col.at(0, 0) == -QElem.sqrt_d(-1)
    assert col.at(1, 0) == QElem.one(-1)


def test_adjoint_involution_and_product_rule():
    rng = random.Random(6)
    for _ in range(50):
        d = rng.choice(FIELDS)
        a = QMatrix.from_rows(d, [[rand_elem(rng, d) for _ in range(3)]
                                  for _ in range(2)])
        b = QMatrix.from_rows(d, [[rand_elem(rng, d) for _ in range(2)]
                                  for _ in range(3)])
        assert a.h.h == a
        assert (a @ b).h == b.h @ a.h


def test_hermitian_quadratic_form_is_real():
    rng = random.Random(7)
    for _ in range(50):
        d = rng.choice(FIELDS)
        a = QMatrix.from_rows(d, [[rand_elem(rng, d) for _ in range(3)]
                                  for _ in range(3)])
        m = a.h @ a  # hermitian
        assert m.is_hermitian()
        x = QMatrix.column(d, [rand_elem(rng, d) for _ in range(3)])
        val = (x.h @ m @ x).scalar()
        assert val.rt == 0


def test_matrix_inverse_and_rank():
    rng = random.Random(8)
    for _ in range(30):
        d = rng.choice(FIELDS)
        m = QMatrix.from_rows(d, [[rand_elem(rng, d) for _ in range(3)]
                                  for _ in range(3)])
        if m.det().is_zero:
            assert m.rank() < 3
            continue
        assert m.rank() == 3
        assert m @ m.inverse() == QMatrix.identity(d, 3)


def test_kernel_dimension():
    d = -5
    z = QElem.zero(d)
    o = QElem.one(d)
    m = QMatrix.from_rows(d, [[o, o], [o, o]])
    assert m.rank() == 1
    assert m.kernel_dimension() == 1
    assert QMatrix.zero(d, 2, 2).kernel_dimension() == 2
    assert QMatrix.identity(d, 2).kernel_dimension() == 0
    assert z.is_zero


def test_block_matrix_assembly():
    d = -5
    b = block_matrix(d, [
        [QElem.one(d), QMatrix.zero(d, 1, 2), QElem.of(d, 7)],
        [QMatrix.zero(d, 2, 1), QMatrix.identity(d, 2), QMatrix.zero(d, 2, 1)],
        [QElem.zero(d), QMatrix.zero(d, 1, 2), QElem.one(d)],
    ])
    assert b.rows == b.cols == 4
    assert b.at(0, 3) == QElem.of(d, 7)
    assert b.at(1, 1) == QElem.one(d)


def test_serialization_round_trip():
    rng = random.Random(9)
    x = rand_elem(rng, -7)
    assert QElem.from_obj(x.to_obj()) == x
    m = QMatrix.from_rows(-7, [[rand_elem(rng, -7) for _ in range(2)]
                               for _ in range(2)])
    assert QMatrix.from_obj(m.to_obj()) == m
