"""Grove enumeration and grove measurements.

A grove of the quotient graph is a spanning acyclic subgraph in which
every connected component contains a boundary vertex.  Each grove
induces a partition of the boundary labels 1..n (labels sharing a tree);
for a planar embedded network that partition is noncrossing.  The
measurement vector collects, for every noncrossing partition, the sum of
conductance products over groves inducing it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import NoncrossingPartition, enumerate_noncrossing
from .network import CactusNetwork, QuotientGraph, quotient_graph, require_valid

GROVE_EDGE_CAP = 20


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True

    def copy(self):
        uf = _UnionFind(())
        uf.parent = dict(self.parent)
        return uf


def _as_quotient(net) -> QuotientGraph:
    if isinstance(net, QuotientGraph):
        return net
    return quotient_graph(net)


def enumerate_groves(net):
    """Yield groves as sorted tuples of edge ids, in lexicographic order.

    Accepts a network or its quotient graph.  Loop edges of the quotient
    never appear in a grove.
    """
    qg = _as_quotient(net)
    if len(qg.edges) > GROVE_EDGE_CAP:
        raise ValueError(
            f"too many edges for grove enumeration (cap {GROVE_EDGE_CAP})"
        )
    edges = sorted(qg.edges)
    boundary = set(qg.boundary)

    def is_grove(uf):
        roots_with_boundary = {uf.find(b) for b in qg.boundary}
        return all(uf.find(v) in roots_with_boundary for v in qg.internal)

    def extend(start, uf, chosen):
        if is_grove(uf):
            yield tuple(chosen)
        for k in range(start, len(edges)):
            eid, u, v, _ = edges[k]
            uf2 = uf.copy()
            if not uf2.union(u, v):
                continue  # would close a cycle
            chosen.append(eid)
            yield from extend(k + 1, uf2, chosen)
            chosen.pop()

    yield from extend(0, _UnionFind(qg.vertices), [])


def grove_partition(net, edge_ids) -> NoncrossingPartition:
    """The boundary partition induced by a grove."""
    qg = _as_quotient(net)
    chosen = set(edge_ids)
    uf = _UnionFind(qg.vertices)
    for eid, u, v, _ in qg.edges:
        if eid in chosen:
            uf.union(u, v)
    groups = {}
    for block in qg.boundary:
        groups.setdefault(uf.find(block), []).extend(block)
    n = sum(len(b) for b in qg.boundary)
    return NoncrossingPartition.from_blocks(n, groups.values())


@dataclass
class GroveMeasurements:
    """Measurement vector indexed by noncrossing partitions of [n]."""

    n: int
    values: dict  # NoncrossingPartition -> Fraction

    def __getitem__(self, sigma) -> Fraction:
        return self.values.get(sigma, Fraction(0))

    def as_list(self):
        """Values in the deterministic enumeration order of partitions."""
        return [self[s] for s in enumerate_noncrossing(self.n)]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values.values())


def lambda_vector(net: CactusNetwork) -> GroveMeasurements:
    require_valid(net)
    qg = quotient_graph(net)
    weight = {eid: c for eid, _, _, c in qg.edges}
    values = {s: Fraction(0) for s in enumerate_noncrossing(net.n)}
    for grove in enumerate_groves(qg):
        w = Fraction(1)
        for eid in grove:
            w *= weight[eid]
        values[grove_partition(qg, grove)] += w
    return GroveMeasurements(net.n, values)


def proportionality_factor(m1: GroveMeasurements, m2: GroveMeasurements):
    """The positive rational t with m2 = t * m1, or None.

    Zero vectors are not proportional to anything (no measurement vector
    of a valid network is zero: the full quotient graph always has some
    grove).
    """
    if m1.n != m2.n or m1.is_zero() or m2.is_zero():
        return None
    v1, v2 = m1.as_list(), m2.as_list()
    t = None
    for a, b in zip(v1, v2):
        if (a == 0) != (b == 0):
            return None
        if a != 0:
            r = b / a
            if t is None:
                t = r
            elif r != t:
                return None
    return t


def equivalence_factor(net1: CactusNetwork, net2: CactusNetwork):
    """The positive rational q with Lambda(net1) = q * Lambda(net2), or None."""
    return proportionality_factor(lambda_vector(net2), lambda_vector(net1))


def electrically_equivalent(net1: CactusNetwork, net2: CactusNetwork) -> bool:
    return equivalence_factor(net1, net2) is not None
