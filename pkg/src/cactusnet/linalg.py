"""Dense exact-rational matrices: Bareiss determinants, rank, solving.

Everything is a ``Fraction``; no floating point enters this module.
Matrices are small (a few hundred rows at most), so plain Gaussian
elimination over Fraction is used for rank/solve and fraction-free
Bareiss elimination for determinants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class RationalMatrix:
    """A rectangular matrix of Fractions."""

    def __init__(self, rows):
        self.rows = [[Fraction(x) for x in r] for r in rows]
        if self.rows:
            width = len(self.rows[0])
            if any(len(r) != width for r in self.rows):
                raise ValueError("ragged rows")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls([[Fraction(0)] * ncols for _ in range(nrows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"RationalMatrix[{body}]"

    def copy(self) -> "RationalMatrix":
        return RationalMatrix(self.rows)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(list(map(list, zip(*self.rows)))) if self.rows \
            else RationalMatrix([])

    def __add__(self, other) -> "RationalMatrix":
        return RationalMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other) -> "RationalMatrix":
        return RationalMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "RationalMatrix":
        c = Fraction(c)
        return RationalMatrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other) -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        cols = other.transpose().rows
        return RationalMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols]
             for row in self.rows]
        )

    def matvec(self, v):
        return [sum(a * b for a, b in zip(row, v)) for row in self.rows]

    def submatrix(self, row_idx, col_idx) -> "RationalMatrix":
        return RationalMatrix(
            [[self.rows[i][j] for j in col_idx] for i in row_idx]
        )

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows) for j in range(i)
        )

    def is_skew_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self.rows[i][j] == -self.rows[j][i]
            for i in range(self.nrows) for j in range(i + 1)
        )

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def determinant(self) -> Fraction:
        """Determinant by Bareiss fraction-free elimination."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return Fraction(1)
        m = [row[:] for row in self.rows]
        sign = 1
        prev = Fraction(1)
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return Fraction(0)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
                m[i][k] = Fraction(0)
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def rank(self) -> int:
        m = [row[:] for row in self.rows]
        r = 0
        for c in range(self.ncols):
            piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            r += 1
            if r == len(m):
                break
        return r


@dataclass
class LinearSolution:
    """A particular solution plus a basis of the kernel."""

    particular: list
    nullspace: list


@dataclass
class Inconsistent:
    """Certificate y with y^T A = 0 but y^T b != 0."""

    certificate: list


def solve_linear(a: RationalMatrix, b):
    """Solve A x = b exactly.

    Returns a :class:`LinearSolution` (any particular solution together
    with a nullspace basis) or an :class:`Inconsistent` certificate.
    """
    nr, nc = a.nrows, a.ncols
    b = [Fraction(x) for x in b]
    if len(b) != nr:
        raise ValueError("rhs length mismatch")
    m = [row[:] + [b[i]] + [Fraction(int(i == j)) for j in range(nr)]
         for i, row in enumerate(a.rows)]
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    for i in range(r, nr):
        if m[i][nc] != 0:
            return Inconsistent(certificate=[m[i][nc + 1 + j] for j in range(nr)])
    particular = [Fraction(0)] * nc
    for row_i, c in enumerate(pivots):
        particular[c] = m[row_i][nc]
    free = [c for c in range(nc) if c not in pivots]
    nullspace = []
    for fc in free:
        v = [Fraction(0)] * nc
        v[fc] = Fraction(1)
        for row_i, c in enumerate(pivots):
            v[c] = -m[row_i][fc]
        nullspace.append(v)
    return LinearSolution(particular=particular, nullspace=nullspace)
