"""Exact rational matrices, checked against sympy as an oracle."""

import random
from fractions import Fraction

import pytest
import sympy

from cactusnet.linalg import Inconsistent, RationalMatrix, solve_linear


def random_matrix(rng, rows, cols, sparse=False):
    def entry():
        if sparse and rng.random() < 0.4:
            return Fraction(0)
        return Fraction(rng.randint(-5, 5), rng.randint(1, 4))

    return RationalMatrix([[entry() for _ in range(cols)] for _ in range(rows)])


def to_sympy(m):
    return sympy.Matrix(
        [[sympy.Rational(x.numerator, x.denominator) for x in row]
         for row in m.rows]
    )


def test_identity_and_zeros():
    i3 = RationalMatrix.identity(3)
    z = RationalMatrix.zeros(2, 3)
    assert i3 @ i3 == i3
    assert z.is_zero()
    assert (i3 - i3).is_zero()


def test_matmul_against_sympy():
    rng = random.Random(7)
    for _ in range(20):
        a = random_matrix(rng, 3, 4)
        b = random_matrix(rng, 4, 2)
        assert to_sympy(a @ b) == to_sympy(a) * to_sympy(b)


def test_determinant_against_sympy():
    rng = random.Random(11)
    for size in (1, 2, 3, 4, 5):
        for _ in range(8):
            m = random_matrix(rng, size, size, sparse=True)
            det = m.determinant()
            assert sympy.Rational(det.numerator, det.denominator) == \
                to_sympy(m).det()


def test_rank_against_sympy():
    rng = random.Random(13)
    for _ in range(25):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = random_matrix(rng, rows, cols, sparse=True)
        assert m.rank() == to_sympy(m).rank()
    # force rank deficiency with duplicated rows
    m = random_matrix(rng, 2, 4)
    stacked = RationalMatrix(m.rows + m.rows)
    assert stacked.rank() == m.rank()


def test_solve_consistent_systems():
    rng = random.Random(17)
    for _ in range(30):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        a = random_matrix(rng, rows, cols, sparse=True)
        x = [Fraction(rng.randint(-3, 3)) for _ in range(cols)]
        b = a.matvec(x)
        sol = solve_linear(a, b)
        assert not isinstance(sol, Inconsistent)
        assert a.matvec(sol.particular) == b
        for v in sol.nullspace:
            assert all(y == 0 for y in a.matvec(v))
        assert len(sol.nullspace) == cols - a.rank()


def test_solve_inconsistent_certificate():
    rng = random.Random(19)
    found = 0
    for _ in range(200):
        a = random_matrix(rng, 4, 3, sparse=True)
        b = [Fraction(rng.randint(-3, 3)) for _ in range(4)]
        sol = solve_linear(a, b)
        if isinstance(sol, Inconsistent):
            found += 1
            cert = sol.certificate
            # certificate is a left null vector of A not orthogonal to b
            lhs = [
                sum(cert[i] * a[(i, j)] for i in range(4)) for j in range(3)
            ]
            assert all(x == 0 for x in lhs)
            assert sum(c * y for c, y in zip(cert, b)) != 0
    assert found >= 5


def test_transpose_and_symmetry():
    m = RationalMatrix([[1, 2], [2, 5]])
    assert m.is_symmetric()
    s = RationalMatrix([[0, 3], [-3, 0]])
    assert s.is_skew_symmetric()
    assert s.transpose() == -s


def test_submatrix():
    m = RationalMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert m.submatrix([0, 2], [1]) == RationalMatrix([[2], [8]])


def test_determinant_requires_square():
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2, 3]]).determinant()
