"""Exterior algebra, the isotropic Grassmannian, and network charts.

Vectors in the (n+1)-st exterior power of R^{2n} are stored sparsely,
keyed by sorted tuples of column positions 0..2n-1 in the interleaved
order 1, 1~, 2, 2~, ..., n, n~ (see combinat).  A network's measurement
vector maps to such an exterior vector whose coefficients, read in a
basis of concordant wedges, are the Plucker coordinates of an isotropic
point of Gr(n+1, 2n).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .combinat import (
    KrewerasPair,
    NoncrossingPartition,
    catalan,
    circle_position,
    concordant_index_pairs,
    enumerate_noncrossing,
)
from .groves import GroveMeasurements
from .linalg import RationalMatrix


class ExteriorVector:
    """Sparse element of wedge^k R^{2n}, keyed by sorted position tuples."""

    def __init__(self, n: int, degree: int, coords=None):
        self.n = n
        self.degree = degree
        self.coords = {}
        for key, val in (coords or {}).items():
            val = Fraction(val)
            if val:
                if len(key) != degree or list(key) != sorted(key):
                    raise ValueError(f"bad key {key} for degree {degree}")
                self.coords[tuple(key)] = val

    def __getitem__(self, key) -> Fraction:
        return self.coords.get(tuple(key), Fraction(0))

    def __add__(self, other) -> "ExteriorVector":
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out.get(k, Fraction(0)) + v
        return ExteriorVector(self.n, self.degree, out)

    def scale(self, c) -> "ExteriorVector":
        c = Fraction(c)
        return ExteriorVector(
            self.n, self.degree, {k: c * v for k, v in self.coords.items()}
        )

    def is_zero(self) -> bool:
        return not self.coords

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExteriorVector)
            and (self.n, self.degree) == (other.n, other.degree)
            and self.coords == other.coords
        )

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v}" for k, v in sorted(self.coords.items()))
        return f"ExteriorVector({self.n}, {self.degree}, {{{inner}}})"


def proportionality_factor(v1: ExteriorVector, v2: ExteriorVector):
    """The rational t with v2 = t * v1, or None (zero vectors excluded)."""
    if (v1.n, v1.degree) != (v2.n, v2.degree):
        return None
    if v1.is_zero() or v2.is_zero():
        return None
    if set(v1.coords) != set(v2.coords):
        return None
    items = iter(v1.coords.items())
    k0, a0 = next(items)
    t = v2.coords[k0] / a0
    if all(v2.coords[k] == t * a for k, a in items):
        return t
    return None


def positions_of(n: int, labels) -> tuple:
    """Sorted circle positions of a set of labels (tilde stored as n+k)."""
    return tuple(sorted(circle_position(n, x) for x in labels))


def f_sigma(pair: KrewerasPair) -> ExteriorVector:
    """Sum of basis wedges over index pairs concordant with the pair."""
    n = pair.n
    coords = {}
    for idx, tidx in concordant_index_pairs(pair):
        coords[positions_of(n, idx + tidx)] = Fraction(1)
    return ExteriorVector(n, n + 1, coords)


def block_vector_matrix(pair: KrewerasPair) -> RationalMatrix:
    """Matrix whose rows are the alternating-sign block vectors.

    Row k sums (-1)^label e_label over the k-th block of the pair; the
    wedge of the rows equals f_sigma up to sign, so its row span is the
    isotropic plane of the pair.
    """
    n = pair.n
    rows = []
    for blk in pair.all_blocks():
        row = [Fraction(0)] * (2 * n)
        for lbl in blk:
            base = lbl if lbl <= n else lbl - n
            row[circle_position(n, lbl)] = Fraction((-1) ** base)
        rows.append(row)
    return RationalMatrix(rows)


def lam_map(measurements: GroveMeasurements) -> ExteriorVector:
    """Exterior vector of a measurement vector: sum of Lambda_sigma f_sigma."""
    n = measurements.n
    out = ExteriorVector(n, n + 1)
    for sigma in enumerate_noncrossing(n):
        val = measurements[sigma]
        if val:
            out = out + f_sigma(KrewerasPair.of(sigma)).scale(val)
    return out


def plucker(m: RationalMatrix) -> ExteriorVector:
    """Plucker coordinates (maximal minors) of a (n+1) x 2n matrix."""
    ncols = m.ncols
    if ncols % 2 or m.nrows != ncols // 2 + 1:
        raise ValueError("matrix must be (n+1) x 2n")
    n = ncols // 2
    rows = range(m.nrows)
    coords = {}
    for cols in itertools.combinations(range(ncols), n + 1):
        coords[cols] = m.submatrix(rows, cols).determinant()
    return ExteriorVector(n, n + 1, coords)


# ---------------------------------------------------------------------------
# The bilinear forms
# ---------------------------------------------------------------------------

def d_matrix(n: int) -> RationalMatrix:
    """Diagonal sign matrix: both columns of label i carry (-1)^(i-1)."""
    diag = []
    for i in range(1, n + 1):
        diag += [Fraction((-1) ** (i - 1))] * 2
    return RationalMatrix(
        [[diag[p] if p == q else Fraction(0) for q in range(2 * n)]
         for p in range(2 * n)]
    )


def omega(n: int) -> RationalMatrix:
    """Gram matrix of the skew form whose isotropic planes have nonnegative
    Plucker coordinates exactly on network images."""
    m = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]

    def put(p, q, v):
        m[p][q] += v
        m[q][p] -= v

    for i in range(1, n + 1):
        put(circle_position(n, i), circle_position(n, n + i), 1)
    for j in range(1, n):
        put(circle_position(n, j + 1), circle_position(n, n + j), 1)
    put(circle_position(n, 1), circle_position(n, 2 * n), Fraction((-1) ** n))
    return RationalMatrix(m)


def omega_d(n: int) -> RationalMatrix:
    """The sign-simplified conjugate form: D Omega D."""
    m = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]

    def put(p, q, v):
        m[p][q] += v
        m[q][p] -= v

    for i in range(1, n + 1):
        put(circle_position(n, i), circle_position(n, n + i), 1)
    for j in range(1, n + 1):
        jp = j % n + 1
        put(circle_position(n, n + j), circle_position(n, jp), 1)
    return RationalMatrix(m)


def omega_kernel(n: int):
    """Basis of the radical: alternating sign vectors on each parity."""
    v1 = [Fraction(0)] * (2 * n)
    v2 = [Fraction(0)] * (2 * n)
    for i in range(1, n + 1):
        v2[circle_position(n, i)] = Fraction((-1) ** (i - 1))
        v1[circle_position(n, n + i)] = Fraction((-1) ** (i - 1))
    return [v1, v2]


def omega_d_kernel(n: int):
    v1 = [Fraction(0)] * (2 * n)
    v2 = [Fraction(0)] * (2 * n)
    for i in range(1, n + 1):
        v1[circle_position(n, i)] = Fraction(1)
        v2[circle_position(n, n + i)] = Fraction(1)
    return [v1, v2]


# ---------------------------------------------------------------------------
# Contraction with the form, isotropy, kernel dimension
# ---------------------------------------------------------------------------

def kappa(form: RationalMatrix, vec: ExteriorVector) -> ExteriorVector:
    """Contract a degree-(n+1) vector with a skew form, degree drops by 2."""
    out = {}
    for key, val in vec.coords.items():
        for p, q in itertools.combinations(range(len(key)), 2):
            w = form[(key[p], key[q])]
            if not w:
                continue
            sign = (-1) ** (p + q - 1)
            rest = key[:p] + key[p + 1:q] + key[q + 1:]
            out[rest] = out.get(rest, Fraction(0)) + sign * w * val
    return ExteriorVector(vec.n, vec.degree - 2, out)


def is_isotropic(m: RationalMatrix, form: RationalMatrix) -> bool:
    """True iff the row span of m is isotropic: m form m^T = 0."""
    return (m @ form @ m.transpose()).is_zero()


def kernel_dimension_of_kappa(n: int, form: RationalMatrix = None) -> int:
    """Dimension of the kernel of the contraction on wedge^(n+1) R^{2n}.

    Equals the Catalan number Cat_n for either boundary form.
    """
    if form is None:
        form = omega(n)
    src = list(itertools.combinations(range(2 * n), n + 1))
    tgt_index = {}
    rows = []
    for key in src:
        img = kappa(form, ExteriorVector(n, n + 1, {key: 1}))
        col = {}
        for k, v in img.coords.items():
            col[tgt_index.setdefault(k, len(tgt_index))] = v
        rows.append(col)
    mat = [[row.get(j, Fraction(0)) for j in range(len(tgt_index))]
           for row in rows]
    rk = RationalMatrix(mat).rank() if tgt_index else 0
    return len(src) - rk


def is_totally_nonnegative(vec: ExteriorVector) -> bool:
    """Nonzero, and all coefficients share one sign (projectively TNN)."""
    if vec.is_zero():
        return False
    signs = {v > 0 for v in vec.coords.values()}
    return len(signs) == 1


# ---------------------------------------------------------------------------
# Cyclic shift
# ---------------------------------------------------------------------------

def shift(n: int) -> RationalMatrix:
    """Row-vector action of the cyclic shift: position p moves to p - 1,
    position 0 wraps to 2n - 1 with sign (-1)^n."""
    m = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    m[0][2 * n - 1] = Fraction((-1) ** n)
    for p in range(1, 2 * n):
        m[p][p - 1] = Fraction(1)
    return RationalMatrix(m)


def shift_exterior(vec: ExteriorVector) -> ExteriorVector:
    """The induced shift on wedge^(n+1); all signs cancel in this degree."""
    n = vec.n
    out = {}
    for key, val in vec.coords.items():
        new = tuple(sorted((p - 1) % (2 * n) for p in key))
        # moving position 0 to the back costs (-1)^n which the wrap
        # coefficient (-1)^n cancels, so the sign is always +1
        out[new] = out.get(new, Fraction(0)) + val
    return ExteriorVector(n, n + 1, out)


def cyclic_shift(m: RationalMatrix) -> RationalMatrix:
    """Column action of the shift on a representing matrix."""
    return m @ shift(m.ncols // 2)


def shift_partition(sigma: NoncrossingPartition) -> NoncrossingPartition:
    """Relabel of the Kreweras complement matching the exterior shift."""
    pair = KrewerasPair.of(sigma)
    return NoncrossingPartition.from_blocks(
        sigma.n, [tuple(x - sigma.n for x in b) for b in pair.tilde_blocks]
    )


# ---------------------------------------------------------------------------
# Charts: response / dual-response matrices to representing matrices
# ---------------------------------------------------------------------------

def chart_from_response(resp: RationalMatrix) -> RationalMatrix:
    """Representing matrix of the isotropic plane of a response matrix.

    Row pattern: a top row supported on tilde columns, then one row per
    label j with a 1 in the plain column of j and the cumulative sums
    S(j, i) in tilde columns, everything multiplied by the sign matrix.
    Gauge: S(j, n) = 0.
    """
    n = resp.nrows
    s = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]  # s[j][i], 1-based
    for j in range(1, n + 1):
        for i in range(n, 1, -1):
            s[j][i - 1] = s[j][i] + resp[(i - 1, j - 1)]
    rows = [[Fraction(0)] * (2 * n) for _ in range(n + 1)]
    for i in range(1, n + 1):
        rows[0][circle_position(n, n + i)] = Fraction(1)
    for j in range(1, n + 1):
        rows[j][circle_position(n, j)] = Fraction(1)
        for i in range(1, n + 1):
            rows[j][circle_position(n, n + i)] = s[j][i]
    return RationalMatrix(rows) @ d_matrix(n)


def chart_from_lstar(lstar: RationalMatrix) -> RationalMatrix:
    """Representing matrix of the isotropic plane of a dual response.

    Same layout with the roles of plain and tilde columns exchanged and
    cumulative sums T(j, i) satisfying T(j, i+1) - T(j, i) = L*(i, j).
    Gauge: T(j, 1) = 0.
    """
    n = lstar.nrows
    t = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for j in range(1, n + 1):
        for i in range(1, n):
            t[j][i + 1] = t[j][i] + lstar[(i - 1, j - 1)]
    rows = [[Fraction(0)] * (2 * n) for _ in range(n + 1)]
    for i in range(1, n + 1):
        rows[0][circle_position(n, i)] = Fraction(1)
    for j in range(1, n + 1):
        rows[j][circle_position(n, n + j)] = Fraction(1)
        for i in range(1, n + 1):
            rows[j][circle_position(n, i)] = t[j][i]
    return RationalMatrix(rows) @ d_matrix(n)


def extract_symmetric(m: RationalMatrix, mode: str) -> RationalMatrix:
    """Recover the symmetric difference matrix from a representing matrix.

    ``mode`` is "response" (pivots on plain columns, differences of the
    tilde entries give the response matrix) or "dual" (the other way
    around).  Fails with ValueError if the plane is outside the chart.
    """
    n = m.ncols // 2
    if m.nrows != n + 1 or m.ncols != 2 * n:
        raise ValueError("matrix must be (n+1) x 2n")
    md = m @ d_matrix(n)
    if mode == "response":
        pivot_cols = [circle_position(n, i) for i in range(1, n + 1)]
        other_cols = [circle_position(n, n + i) for i in range(1, n + 1)]
    elif mode == "dual":
        pivot_cols = [circle_position(n, n + i) for i in range(1, n + 1)]
        other_cols = [circle_position(n, i) for i in range(1, n + 1)]
    else:
        raise ValueError(f"unknown mode {mode!r}")

    from .linalg import Inconsistent, solve_linear

    piv = md.submatrix(range(n + 1), pivot_cols)   # (n+1) x n
    # left kernel of the pivot block: the residual top row direction
    sol = solve_linear(piv.transpose(), [Fraction(0)] * n)
    if len(sol.nullspace) != 1:
        raise ValueError("plane is not in this chart")
    u = sol.nullspace[0]
    top = [sum(u[r] * md[(r, c)] for r in range(n + 1)) for c in other_cols]
    if len(set(top)) != 1 or top[0] == 0:
        raise ValueError("plane is not in this chart")
    # rows of the pattern: solve piv^T x = e_j for each label j
    entries = [[Fraction(0)] * n for _ in range(n)]  # entries[j-1][i-1]
    for j in range(n):
        rhs = [Fraction(int(k == j)) for k in range(n)]
        sol = solve_linear(piv.transpose(), rhs)
        if isinstance(sol, Inconsistent):
            raise ValueError("plane is not in this chart")
        x = sol.particular
        for i, c in enumerate(other_cols):
            entries[j][i] = sum(x[r] * md[(r, c)] for r in range(n + 1)) / top[0]

    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if mode == "response":
                prev = (i - 2) % n
                out[i - 1][j - 1] = entries[j - 1][prev] - entries[j - 1][i - 1]
            else:
                nxt = i % n
                out[i - 1][j - 1] = entries[j - 1][nxt] - entries[j - 1][i - 1]
    return RationalMatrix(out)


def extreme_coordinates(vec: ExteriorVector):
    """The two families of extreme Plucker coordinates.

    Returns (not_shorted, connected): coefficients on "all plain columns
    plus one tilde column" and "one plain column plus all tilde".  Each
    family is constant on isotropic network images.
    """
    n = vec.n
    plain = [circle_position(n, i) for i in range(1, n + 1)]
    tilde = [circle_position(n, n + i) for i in range(1, n + 1)]
    not_shorted = [vec[tuple(sorted(plain + [tk]))] for tk in tilde]
    connected = [vec[tuple(sorted([p] + tilde))] for p in plain]
    if len(set(not_shorted)) != 1 or len(set(connected)) != 1:
        raise ValueError("extreme coordinates differ; vector is not an image")
    return not_shorted[0], connected[0]
