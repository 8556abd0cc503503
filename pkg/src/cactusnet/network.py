"""Cactus networks: data model, validation, medial strands, Y-Delta, duals.

A network is stored pre-quotient: a planar graph in a disc with boundary
vertices ``b1..bn`` in clockwise order, a shape partition describing
which boundary vertices are glued, and a rotation system (clockwise
cyclic order of incident edges at every vertex).  For a boundary vertex
the stored rotation list is read clockwise starting from the side of the
boundary arc that follows the vertex in clockwise order.

All face/strand computations run on an augmented combinatorial map of
the quotient: boundary vertices in one shape block are merged (their
rotations concatenated in increasing label order) and n virtual boundary
arcs are added along the disc boundary.  Faces are orbits of
``d -> sigma(alpha(d))`` on darts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .combinat import (
    Matching,
    NoncrossingPartition,
    canonical_blocks,
    is_noncrossing,
    is_partition,
)


@dataclass(frozen=True)
class Edge:
    id: str
    ends: tuple
    conductance: Fraction


def boundary_name(i: int) -> str:
    return f"b{i}"


@dataclass(eq=False)
class CactusNetwork:
    """Immutable by convention; rewrites return new networks."""

    n: int
    shape: tuple  # canonical blocks of 1..n (may be invalid; see validate)
    internal_vertices: tuple
    edges: tuple
    rotations: dict  # vertex name -> tuple of incident edge ids, clockwise

    @classmethod
    def build(cls, n, shape, internal_vertices, edges, rotations):
        shape = canonical_blocks(shape)
        es = tuple(
            e if isinstance(e, Edge) else
            Edge(e[0], (e[1][0], e[1][1]), Fraction(e[2]))
            for e in edges
        )
        rot = {v: tuple(ids) for v, ids in rotations.items()}
        net = cls(n, shape, tuple(internal_vertices), es, rot)
        # Vertices with no stated rotation get the empty one.
        for v in net.vertex_names():
            rot.setdefault(v, ())
        return net

    def vertex_names(self):
        return [boundary_name(i) for i in range(1, self.n + 1)] + list(
            self.internal_vertices
        )

    def shape_partition(self) -> NoncrossingPartition:
        return NoncrossingPartition.from_blocks(self.n, self.shape)

    def edge_by_id(self, eid: str) -> Edge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise KeyError(eid)

    def conductance_product(self) -> Fraction:
        prod = Fraction(1)
        for e in self.edges:
            prod *= e.conductance
        return prod

    def replace(self, **kw) -> "CactusNetwork":
        data = dict(
            n=self.n, shape=self.shape,
            internal_vertices=self.internal_vertices,
            edges=self.edges, rotations=self.rotations,
        )
        data.update(kw)
        return CactusNetwork.build(**data)


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)  # (name, ok, detail)

    def add(self, name: str, ok: bool, detail: str = ""):
        self.checks.append((name, ok, detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self):
        return [(name, detail) for name, ok, detail in self.checks if not ok]


# ---------------------------------------------------------------------------
# Augmented combinatorial map of the quotient.
#
# A dart is (key, end) with key an edge id or ("arc", i), end in {0, 1}.
# Arc i runs from boundary vertex i (end 0) to vertex i+1 (end 1).
# ---------------------------------------------------------------------------

def arc_key(i: int):
    return ("arc", i)


def is_arc(dart) -> bool:
    return isinstance(dart[0], tuple)


class CombMap:
    def __init__(self, net: CactusNetwork):
        self.net = net
        n = net.n
        part = net.shape_partition()
        self.block_of = {i: part.block_of(i) for i in range(1, n + 1)}

        self.rot = {}          # vertex key -> list of darts, clockwise
        self.pre_vertex = {}   # dart -> pre-quotient vertex name

        end_of = {}
        for e in net.edges:
            if e.ends[0] == e.ends[1]:
                raise ValueError(f"loop edge {e.id} in pre-quotient network")
            end_of[(e.id, e.ends[0])] = 0
            end_of[(e.id, e.ends[1])] = 1

        def labels_beyond(block, i, eid):
            """Boundary labels reachable from edge eid at b_i without
            passing back through the glued vertices of the block."""
            blocked = {boundary_name(j) for j in block}
            e = edge_index[eid]
            o = e.ends[1] if e.ends[0] == boundary_name(i) else e.ends[0]
            if o in blocked:
                return {int(o[1:])}
            seen = {o}
            stack = [o]
            labels = set()
            while stack:
                v = stack.pop()
                if v.startswith("b") and v[1:].isdigit():
                    labels.add(int(v[1:]))
                for e2 in incident.get(v, ()):
                    for w in e2.ends:
                        if w not in seen and w not in blocked:
                            seen.add(w)
                            stack.append(w)
            return labels

        edge_index = {e.id: e for e in net.edges}
        incident = {}
        for e in net.edges:
            for v in e.ends:
                incident.setdefault(v, []).append(e)

        def in_closed_interval(x, lo, hi):
            # cyclic interval of labels [lo .. hi], endpoints included
            if lo <= hi:
                return lo <= x <= hi
            return x >= lo or x <= hi

        def dart_at(i, eid):
            return (eid, end_of[(eid, boundary_name(i))])

        def prev_arc(i):
            return i - 1 if i > 1 else n

        for block in part.blocks:
            k = len(block)
            if k == 1:
                i = block[0]
                darts = [(arc_key(i), 0)]
                darts += [dart_at(i, eid)
                          for eid in net.rotations.get(boundary_name(i), ())]
                darts.append((arc_key(prev_arc(i)), 1))
                for d in darts:
                    self.pre_vertex[d] = boundary_name(i)
                self.rot[block] = darts
                continue
            # Gluing the labels of the block pinches the disc into k lobes,
            # one per consecutive label pair (i_j, i_{j+1}).  Around the
            # glued point the clockwise order visits each lobe in turn:
            # the tail of arc i_j, the edges embedded in that lobe, then
            # the head of arc i_{j+1} - 1.  An edge at b_{i_j} belongs to
            # the lobe whose label interval contains everything its
            # component of the pre-quotient graph attaches to; when both
            # adjacent lobes qualify the following lobe is chosen.
            into = {}  # j -> edges of lobe j contributed by b_{i_j} / b_{i_{j+1}}
            for j, i in enumerate(block):
                nxt = block[(j + 1) % k]
                prv = block[(j - 1) % k]
                fwd, back = [], []
                for eid in net.rotations.get(boundary_name(i), ()):
                    e = edge_index[eid]
                    o = e.ends[1] if e.ends[0] == boundary_name(i) else e.ends[0]
                    if o in {boundary_name(j) for j in block}:
                        # both ends glued here: the edge must sit in a
                        # lobe bounded by both labels; ties (blocks of
                        # size two) go to the lobe after the smaller one
                        y = int(o[1:])
                        if nxt == y and (prv != y or i < y):
                            fwd.append(eid)
                        elif prv == y:
                            back.append(eid)
                        else:
                            raise ValueError(
                                f"edge {eid} joins non-adjacent labels of "
                                f"glued block {block}"
                            )
                        continue
                    other = labels_beyond(block, i, eid)
                    fits_fwd = all(in_closed_interval(x, i, nxt) for x in other)
                    fits_back = all(in_closed_interval(x, prv, i) for x in other)
                    if fits_fwd:
                        fwd.append(eid)
                    elif fits_back:
                        back.append(eid)
                    else:
                        raise ValueError(
                            f"edge {eid} cannot be embedded in any lobe at "
                            f"glued block {block}"
                        )
                if back and fwd and net.rotations[boundary_name(i)].index(
                        back[0]) < net.rotations[boundary_name(i)].index(fwd[-1]):
                    raise ValueError(
                        f"rotation at {boundary_name(i)} interleaves lobes"
                    )
                into.setdefault(j, {})["prefix"] = fwd
                into.setdefault((j - 1) % k, {})["suffix"] = back
            darts = []
            for j, i in enumerate(block):
                nxt = block[(j + 1) % k]
                seg = [(arc_key(i), 0)]
                seg += [dart_at(i, eid) for eid in into[j].get("prefix", [])]
                for d in seg:
                    self.pre_vertex.setdefault(d, boundary_name(i))
                tail = [dart_at(nxt, eid) for eid in into[j].get("suffix", [])]
                tail.append((arc_key(prev_arc(nxt)), 1))
                for d in tail:
                    self.pre_vertex.setdefault(d, boundary_name(nxt))
                darts += seg + tail
            self.rot[block] = darts
        for v in net.internal_vertices:
            darts = [(eid, end_of[(eid, v)]) for eid in net.rotations.get(v, ())]
            for d in darts:
                self.pre_vertex[d] = v
            self.rot[v] = darts

        self.vertex_of = {}
        self.index_of = {}
        for v, darts in self.rot.items():
            for k, d in enumerate(darts):
                if d in self.vertex_of:
                    raise ValueError(f"dart {d} listed twice in rotations")
                self.vertex_of[d] = v
                self.index_of[d] = k
        for e in net.edges:
            for end in (0, 1):
                if (e.id, end) not in self.vertex_of:
                    raise ValueError(
                        f"edge {e.id} missing from rotation of {e.ends[end]}"
                    )

    def alpha(self, d):
        return (d[0], 1 - d[1])

    def sigma_next(self, d):
        darts = self.rot[self.vertex_of[d]]
        return darts[(self.index_of[d] + 1) % len(darts)]

    def sigma_prev(self, d):
        darts = self.rot[self.vertex_of[d]]
        return darts[(self.index_of[d] - 1) % len(darts)]

    def face_next(self, d):
        return self.sigma_next(self.alpha(d))

    def faces(self):
        """Face orbits of the map, each a list of darts in walk order."""
        seen = set()
        out = []
        for d0 in sorted(self.vertex_of, key=_dart_key):
            if d0 in seen:
                continue
            cyc = []
            d = d0
            while d not in seen:
                seen.add(d)
                cyc.append(d)
                d = self.face_next(d)
            if d != d0:
                raise AssertionError("face walk did not close")
            out.append(cyc)
        return out

    def components(self):
        """Connected components of the map, as sets of vertex keys."""
        adj = {v: set() for v in self.rot}
        for d, v in self.vertex_of.items():
            adj[v].add(self.vertex_of[self.alpha(d)])
        comps = []
        todo = set(self.rot)
        while todo:
            start = todo.pop()
            comp = {start}
            stack = [start]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            todo -= comp
            comps.append(comp)
        return comps

    def euler_ok(self) -> bool:
        """V - E + F = 2 for every connected component (genus 0)."""
        face_of = {}
        for idx, f in enumerate(self.faces()):
            for d in f:
                face_of[d] = idx
        for comp in self.components():
            darts = [d for d, v in self.vertex_of.items() if v in comp]
            v_count = len(comp)
            e_count = len(darts) // 2
            f_count = len({face_of[d] for d in darts})
            if v_count - e_count + f_count != 2:
                return False
        return True

    def outer_face(self, faces):
        """The face walking the outside of the cactus: one dart per arc."""
        cands = [
            f for f in faces
            if len(f) == self.net.n
            and all(is_arc(d) for d in f)
            and len({d[0] for d in f}) == self.net.n
        ]
        if not cands:
            raise AssertionError("no outer face found; embedding invalid")
        return min(cands, key=lambda f: _dart_key(min(f, key=_dart_key)))


def _dart_key(d):
    key, end = d
    return (1, key[1], end) if isinstance(key, tuple) else (0, key, end)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def validate(net: CactusNetwork) -> ValidationReport:
    rep = ValidationReport()
    part_ok = is_partition(net.n, net.shape)
    rep.add("shape-partition", part_ok,
            "" if part_ok else f"shape does not partition [1..{net.n}]")
    nc_ok = part_ok and is_noncrossing(net.n, net.shape)
    rep.add("shape-noncrossing", nc_ok, "" if nc_ok else "shape crosses")

    bad = [e.id for e in net.edges if e.conductance <= 0]
    rep.add("conductance-positive", not bad,
            "" if not bad else f"nonpositive conductance on {bad}")

    loops = [e.id for e in net.edges if e.ends[0] == e.ends[1]]
    rep.add("no-loops", not loops, "" if not loops else f"loop edges {loops}")

    names = set(net.vertex_names())
    dangling = [e.id for e in net.edges if not set(e.ends) <= names]
    rep.add("edge-endpoints", not dangling,
            "" if not dangling else f"unknown endpoints on {dangling}")

    rot_ok, rot_msg = True, ""
    if not dangling and not loops:
        incident = {v: [] for v in names}
        for e in net.edges:
            incident[e.ends[0]].append(e.id)
            incident[e.ends[1]].append(e.id)
        for v in names:
            if sorted(net.rotations.get(v, ())) != sorted(incident[v]):
                rot_ok, rot_msg = False, f"rotation of {v} != incident edges"
                break
    rep.add("rotations-consistent", rot_ok, rot_msg)

    planar_ok, planar_msg = False, "skipped (earlier failures)"
    if nc_ok and not loops and not dangling and rot_ok:
        try:
            planar_ok = CombMap(net).euler_ok()
            planar_msg = "" if planar_ok else "Euler genus check failed"
        except (ValueError, AssertionError) as exc:
            planar_msg = str(exc)
    rep.add("planar-embedding", planar_ok, planar_msg)
    return rep


def require_valid(net: CactusNetwork) -> None:
    rep = validate(net)
    if not rep.ok:
        raise ValueError(f"invalid network: {rep.failures()}")


# ---------------------------------------------------------------------------
# Quotient graph (for Laplacian and groves)
# ---------------------------------------------------------------------------

@dataclass
class QuotientGraph:
    """The graph Gamma: boundary vertices are shape blocks."""

    boundary: tuple          # block tuples, canonical order
    internal: tuple          # internal vertex names, sorted
    edges: tuple             # (edge_id, key_u, key_v, conductance), no loops
    loop_ids: tuple          # edges collapsed to loops by the quotient

    @property
    def vertices(self):
        return tuple(self.boundary) + tuple(self.internal)


def quotient_graph(net: CactusNetwork) -> QuotientGraph:
    part = net.shape_partition()

    def key(v):
        if v.startswith("b") and v[1:].isdigit():
            return part.block_of(int(v[1:]))
        return v

    plain, loops = [], []
    for e in net.edges:
        ku, kv = key(e.ends[0]), key(e.ends[1])
        if ku == kv:
            loops.append(e.id)
        else:
            plain.append((e.id, ku, kv, e.conductance))
    return QuotientGraph(
        boundary=part.blocks,
        internal=tuple(sorted(net.internal_vertices)),
        edges=tuple(plain),
        loop_ids=tuple(loops),
    )


# ---------------------------------------------------------------------------
# Medial strands
# ---------------------------------------------------------------------------
#
# A strand state is (dart, parity): the strand is about to cross the
# dart's edge, having approached through the corner at the dart's vertex
# that lies before ("neg") or after ("pos") the dart in clockwise order.
# Crossing flips the parity at the far end.

def _strand_step(cmap: CombMap, state):
    d, par = state
    db = cmap.alpha(d)
    if par == "neg":
        return (cmap.sigma_prev(db), "pos")
    return (cmap.sigma_next(db), "neg")


def _t_start(cmap: CombMap, t: int):
    """Initial strand state for boundary point t (1-based, on the circle)."""
    n = cmap.net.n
    if t % 2 == 0:        # t_{2i}: on arc i, near vertex i
        i = t // 2
        return (cmap.sigma_next((arc_key(i), 0)), "neg")
    i = (t - 1) // 2 or n  # t_{2i+1}: on arc i, near vertex i+1
    return (cmap.sigma_prev((arc_key(i), 1)), "pos")


def _t_end(cmap: CombMap, state) -> int:
    d, par = state
    i = d[0][1]
    n = cmap.net.n
    if par == "pos":
        if d[1] != 0:
            raise AssertionError("strand reached an arc from outside")
        return 2 * i
    if d[1] != 1:
        raise AssertionError("strand reached an arc from outside")
    return 2 * i + 1 if i < n else 1


def trace_strands(net: CactusNetwork):
    """Trace the n medial strands.

    Returns a list of (t_start, t_end, passages) triples, one per
    directed trace from each boundary point; passages are (edge_id,
    parity) pairs identifying each edge crossing.
    """
    cmap = CombMap(net)
    out = []
    for t in range(1, 2 * net.n + 1):
        state = _t_start(cmap, t)
        passages = []
        for _ in range(4 * len(net.edges) + 4 * net.n + 4):
            if is_arc(state[0]):
                out.append((t, _t_end(cmap, state), tuple(passages)))
                break
            passages.append((state[0][0], state[1]))
            state = _strand_step(cmap, state)
        else:
            raise AssertionError("medial strand failed to terminate")
    return out


def medial_pairing(net: CactusNetwork) -> Matching:
    traces = trace_strands(net)
    ends = {t: e for t, e, _ in traces}
    for t, e in ends.items():
        if ends.get(e) != t:
            raise AssertionError("strand tracing is not symmetric")
    pairs = {tuple(sorted((t, e))) for t, e in ends.items()}
    return Matching.from_pairs(net.n, pairs)


def is_minimal(net: CactusNetwork) -> bool:
    """No self-intersecting strand, no bigon, no closed interior loop."""
    traces = trace_strands(net)
    strand_of = {}
    strands = {}
    for t, e, passages in traces:
        sid = min(t, e)
        strands.setdefault(sid, set()).update(passages)
        for p in passages:
            strand_of[p] = sid
    # Passages not met by any boundary strand form closed interior loops.
    if len(strand_of) < 2 * len(net.edges):
        return False
    crossings = {}
    for e in net.edges:
        s1 = strand_of[(e.id, "pos")]
        s2 = strand_of[(e.id, "neg")]
        if s1 == s2:
            return False
        crossings[frozenset((s1, s2))] = crossings.get(frozenset((s1, s2)), 0) + 1
    return all(c <= 1 for c in crossings.values())


# ---------------------------------------------------------------------------
# Y-Delta moves
# ---------------------------------------------------------------------------

def _fresh_tag(net: CactusNetwork) -> str:
    used = {e.id for e in net.edges} | set(net.vertex_names())
    k = 1
    while any(f"yd{k}{s}" in used for s in "abcv"):
        k += 1
    return f"yd{k}"


def _replace_in_rotation(rot, old_ids, new_ids):
    """Replace the consecutive run old_ids by new_ids, in place.

    Boundary rotations are anchored at the boundary arcs, so the list
    must not be rotated.  A run that wraps around the end of the list
    only occurs at internal vertices, where rotating is harmless.
    """
    rot = list(rot)
    m = len(old_ids)
    for start in range(len(rot) - m + 1):
        if rot[start:start + m] == list(old_ids):
            return tuple(rot[:start] + list(new_ids) + rot[start + m:])
    for start in range(len(rot)):
        if [rot[(start + j) % len(rot)] for j in range(m)] == list(old_ids):
            keep = [rot[(start + m + j) % len(rot)] for j in range(len(rot) - m)]
            return tuple(list(new_ids) + keep)
    raise ValueError(f"{old_ids} not consecutive in rotation {rot}")


def ydelta(net: CactusNetwork, site, direction: str) -> CactusNetwork:
    """Apply a Y-Delta move; conductances follow A = bc/(a+b+c) etc."""
    if direction == "ytod":
        return _y_to_delta(net, site)
    if direction == "dtoy":
        return _delta_to_y(net, site)
    raise ValueError(f"unknown direction {direction!r}")


def _y_to_delta(net: CactusNetwork, center: str) -> CactusNetwork:
    if center not in net.internal_vertices:
        raise ValueError(f"{center} is not an internal vertex")
    rot = net.rotations[center]
    if len(rot) != 3:
        raise ValueError(f"{center} does not have degree 3")
    legs = [net.edge_by_id(eid) for eid in rot]
    nbrs = [e.ends[1] if e.ends[0] == center else e.ends[0] for e in legs]
    if len(set(nbrs)) != 3:
        raise ValueError("Y neighbors are not distinct")
    a = [e.conductance for e in legs]
    total = sum(a)
    tag = _fresh_tag(net)
    new_ids = [f"{tag}a", f"{tag}b", f"{tag}c"]
    # new edge j connects neighbor j to neighbor j+1 (clockwise at center)
    new_edges = [
        Edge(new_ids[j], (nbrs[j], nbrs[(j + 1) % 3]),
             a[j] * a[(j + 1) % 3] / total)
        for j in range(3)
    ]
    rotations = dict(net.rotations)
    del rotations[center]
    for j, u in enumerate(nbrs):
        # at neighbor j the old leg is replaced, clockwise, by the edge
        # toward neighbor j+1 then the edge toward neighbor j-1
        rotations[u] = _replace_in_rotation(
            rotations[u], [legs[j].id], [new_ids[j], new_ids[(j - 1) % 3]]
        )
    edges = tuple(e for e in net.edges if e.id not in set(rot)) + tuple(new_edges)
    internal = tuple(v for v in net.internal_vertices if v != center)
    return CactusNetwork.build(net.n, net.shape, internal, edges, rotations)


def _triangular_faces(net: CactusNetwork):
    cmap = CombMap(net)
    faces = []
    for f in cmap.faces():
        if len(f) != 3 or any(is_arc(d) for d in f):
            continue
        corners = [cmap.pre_vertex[d] for d in f]
        others = [cmap.pre_vertex[cmap.sigma_prev(d)] for d in f]
        if len(set(corners)) == 3 and corners == others:
            faces.append((f, corners))
    return cmap, faces


def _delta_to_y(net: CactusNetwork, corners) -> CactusNetwork:
    if isinstance(corners, str):
        corners = corners.split(",")
    corners = tuple(corners)
    if len(set(corners)) != 3:
        raise ValueError("a Delta site needs three distinct corner vertices")
    cmap, faces = _triangular_faces(net)
    match = [(f, cs) for f, cs in faces if set(cs) == set(corners)]
    if not match:
        raise ValueError(f"no triangular face with corners {corners}")
    f, walk_corners = min(match, key=lambda fc: _dart_key(min(fc[0], key=_dart_key)))

    tag = _fresh_tag(net)
    center = f"{tag}v"
    cond = {d[0]: net.edge_by_id(d[0]).conductance for d in f}
    numer = sum(
        x * y for x, y in itertools.combinations(cond.values(), 2)
    )
    rotations = dict(net.rotations)
    leg_ids = {}
    new_edges = []
    for k, d in enumerate(f):
        w = cmap.pre_vertex[d]
        pair = (cmap.sigma_prev(d)[0], d[0])          # consecutive at w
        opposite = next(x[0] for x in f if x[0] not in pair)
        leg = f"{tag}{'abc'[k]}"
        leg_ids[w] = leg
        new_edges.append(Edge(leg, (w, center), numer / cond[opposite]))
        rotations[w] = _replace_in_rotation(rotations[w], list(pair), [leg])
    # clockwise rotation at the new center = reversed face-walk order
    rotations[center] = tuple(leg_ids[w] for w in reversed(walk_corners))
    tri_ids = {d[0] for d in f}
    edges = tuple(e for e in net.edges if e.id not in tri_ids) + tuple(new_edges)
    internal = net.internal_vertices + (center,)
    return CactusNetwork.build(net.n, net.shape, internal, edges, rotations)


# ---------------------------------------------------------------------------
# Dual network
# ---------------------------------------------------------------------------

def dual(net: CactusNetwork) -> CactusNetwork:
    """The dual cactus network, with boundary labels already shifted.

    Faces of the quotient map become dual vertices; a face containing
    the inner side of boundary arc i hosts the dual boundary label i~,
    which the clockwise shift s renames to i.  Dual conductances are the
    reciprocals of the primal ones.
    """
    require_valid(net)
    cmap = CombMap(net)
    faces = cmap.faces()
    outer = cmap.outer_face(faces)
    inner = [f for f in faces if f is not outer]

    owner = {}        # real dart -> dual vertex name
    segments = {}     # dual boundary vertex -> list of real darts, in order
    shape_blocks = []
    internal_names = []
    fcount = 0
    for f in inner:
        arc_positions = [k for k, d in enumerate(f) if is_arc(d)]
        if not arc_positions:
            fcount += 1
            name = f"f{fcount}"
            internal_names.append(name)
            for d in f:
                owner[d] = name
            segments[name] = list(f)
            continue
        labels = [f[k][0][1] for k in arc_positions]
        shape_blocks.append(tuple(sorted(labels)))
        # reals following each arc dart (up to the next arc) belong to it
        for j, k in enumerate(arc_positions):
            stop = arc_positions[(j + 1) % len(arc_positions)]
            name = boundary_name(f[k][0][1])
            seg = []
            p = (k + 1) % len(f)
            while p != stop:
                seg.append(f[p])
                owner[f[p]] = name
                p = (p + 1) % len(f)
            segments[name] = seg

    dual_edges = []
    for e in net.edges:
        u = owner[(e.id, 0)]
        v = owner[(e.id, 1)]
        dual_edges.append(Edge(e.id, (u, v), 1 / e.conductance))
    # face walks run counterclockwise as seen from the dual vertex, so
    # clockwise rotations are the reversed segments
    rotations = {
        name: tuple(d[0] for d in reversed(seg))
        for name, seg in segments.items()
    }
    return CactusNetwork.build(
        net.n, shape_blocks, sorted(internal_names), dual_edges, rotations
    )
