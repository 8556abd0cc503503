"""Response matrices, effective resistance, and the dual response.

Sign convention for the response matrix L: off-diagonal entries are
nonnegative and rows sum to zero, so the diagonal is nonpositive.  With
this convention a potential vector V and the net currents out of the
boundary satisfy current = -L V, and effective resistance comes out
positive: solving L V = e_u - e_v gives R(u, v) = V[v] - V[u].
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import Inconsistent, RationalMatrix, solve_linear
from .network import CactusNetwork, QuotientGraph, quotient_graph, require_valid


def laplacian(qg: QuotientGraph) -> RationalMatrix:
    """Weighted graph Laplacian, rows/columns in ``qg.vertices`` order."""
    order = {v: k for k, v in enumerate(qg.vertices)}
    m = [[Fraction(0)] * len(order) for _ in order]
    for _, u, v, c in qg.edges:
        iu, iv = order[u], order[v]
        m[iu][iu] += c
        m[iv][iv] += c
        m[iu][iv] -= c
        m[iv][iu] -= c
    return RationalMatrix(m)


def response_matrix(net: CactusNetwork) -> RationalMatrix:
    """The boundary response matrix L (negated Schur complement).

    Rows and columns follow the canonical order of the shape blocks.
    Internal vertices must all be connected to the boundary.
    """
    require_valid(net)
    qg = quotient_graph(net)
    lap = laplacian(qg)
    nb = len(qg.boundary)
    ni = len(qg.internal)
    bb = lap.submatrix(range(nb), range(nb))
    if ni == 0:
        return -bb
    bi = lap.submatrix(range(nb), range(nb, nb + ni))
    ii = lap.submatrix(range(nb, nb + ni), range(nb, nb + ni))
    ib = bi.transpose()
    # solve II X = IB column by column; II is invertible exactly when
    # every internal vertex connects to the boundary
    cols = []
    for j in range(nb):
        sol = solve_linear(ii, [ib[(i, j)] for i in range(ni)])
        if isinstance(sol, Inconsistent) or sol.nullspace:
            raise ValueError("an internal vertex is isolated from the boundary")
        cols.append(sol.particular)
    x = RationalMatrix(cols).transpose()
    return -(bb - bi @ x)


def resistance_matrix(net: CactusNetwork) -> RationalMatrix:
    """Effective resistances between boundary labels, as an n x n matrix.

    Labels glued by the shape are at distance zero.  Requires the
    quotient graph to be connected across the boundary (otherwise there
    is no finite resistance between some pair).
    """
    part = net.shape_partition()
    resp = response_matrix(net)
    nb = resp.nrows
    block_index = {b: k for k, b in enumerate(part.blocks)}

    n = net.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for bu in range(nb):
        for bv in range(bu + 1, nb):
            rhs = [Fraction(0)] * nb
            rhs[bu] += 1
            rhs[bv] -= 1
            sol = solve_linear(resp, rhs)
            if isinstance(sol, Inconsistent):
                raise ValueError(
                    "boundary components are disconnected; resistance is infinite"
                )
            # gauge: shift the potential so V(u) = 0 (deterministic choice;
            # R depends only on the difference)
            v_pot = [x - sol.particular[bu] for x in sol.particular]
            r = v_pot[bv] - v_pot[bu]
            for i in part.blocks[bu]:
                for j in part.blocks[bv]:
                    rows[i - 1][j - 1] = r
                    rows[j - 1][i - 1] = r
    return RationalMatrix(rows)


def lstar_from_resistance(r: RationalMatrix) -> RationalMatrix:
    """The dual response built from second differences of resistance.

    Off-diagonal entries are half the alternating sum of R over the four
    cyclically shifted index pairs; diagonals make the rows sum to zero.
    """
    n = r.nrows

    def rr(i, j):  # 1-based, cyclic
        i = (i - 1) % n + 1
        j = (j - 1) % n + 1
        return r[(i - 1, j - 1)]

    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            m[i - 1][j - 1] = (
                rr(i, j) + rr(i + 1, j + 1) - rr(i + 1, j) - rr(i, j + 1)
            ) / 2
    for i in range(n):
        m[i][i] = -sum(m[i][j] for j in range(n) if j != i)
    return RationalMatrix(m)
