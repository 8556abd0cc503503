"""Network validation, combinatorial map, medial strands, rewrites."""

import random
from fractions import Fraction

import pytest

from conftest import (
    make_delta,
    make_disconnected,
    make_edgeless,
    make_glued_tree,
    make_shorted,
    make_single_edge,
    make_y,
    random_planar_net,
)
from cactusnet.groves import equivalence_factor, lambda_vector
from cactusnet.network import (
    CactusNetwork,
    CombMap,
    dual,
    is_minimal,
    medial_pairing,
    quotient_graph,
    require_valid,
    validate,
    ydelta,
)


def failing_checks(net):
    return {name for name, _ in validate(net).failures()}


def test_validate_accepts_fixtures():
    for net in (make_y(1, 2, 3), make_delta(1, 2, 3), make_single_edge(),
                make_edgeless(4), make_glued_tree(), make_shorted(),
                make_disconnected()):
        assert validate(net).ok


def test_validate_shape_not_a_partition():
    net = make_y(1, 2, 3).replace(shape=[(1, 2)])
    assert "shape-partition" in failing_checks(net)


def test_validate_crossing_shape():
    net = CactusNetwork.build(4, [(1, 3), (2, 4)], [], [], {})
    assert "shape-noncrossing" in failing_checks(net)


def test_validate_nonpositive_conductance():
    net = make_single_edge(Fraction(0))
    assert "conductance-positive" in failing_checks(net)


def test_validate_loop_edge():
    net = CactusNetwork.build(
        2, [(1,), (2,)], ["v"], [("e", ("v", "v"), 1)], {"v": ["e", "e"]})
    assert "no-loops" in failing_checks(net)


def test_validate_unknown_endpoint():
    net = CactusNetwork.build(
        2, [(1,), (2,)], [], [("e", ("b1", "b7"), 1)],
        {"b1": ["e"], "b7": ["e"]})
    assert "edge-endpoints" in failing_checks(net)


def test_validate_rotation_mismatch():
    net = make_y(1, 2, 3).replace(
        rotations={"b1": ["e1"], "b2": ["e2"], "b3": ["e3"],
                   "v": ["e1", "e2"]})
    assert "rotations-consistent" in failing_checks(net)


def test_validate_nonplanar_rotation():
    # K4 drawn with a deliberately impossible rotation at the hub
    net = CactusNetwork.build(
        3, [(1,), (2,), (3,)], ["v"],
        [("e1", ("b1", "v"), 1), ("e2", ("b2", "v"), 1),
         ("e3", ("b3", "v"), 1),
         ("d12", ("b1", "b2"), 1), ("d23", ("b2", "b3"), 1),
         ("d31", ("b3", "b1"), 1)],
        {"b1": ["d12", "e1", "d31"], "b2": ["d23", "e2", "d12"],
         "b3": ["d31", "e3", "d23"], "v": ["e1", "e3", "e2"]},
    )
    assert "planar-embedding" in failing_checks(net)
    fixed = net.replace(rotations=dict(net.rotations, v=("e1", "e2", "e3")))
    assert validate(fixed).ok


def test_require_valid_raises():
    with pytest.raises(ValueError):
        require_valid(make_single_edge(Fraction(-1)))


def test_quotient_graph_blocks_and_loops():
    net = make_glued_tree()
    qg = quotient_graph(net)
    assert qg.boundary == ((1,), (2, 3), (4, 6), (5,))
    assert qg.loop_ids == ()
    # an edge between glued labels collapses to a loop
    net2 = CactusNetwork.build(
        3, [(1, 3), (2,)], [], [("e", ("b1", "b3"), 1)],
        {"b1": ["e"], "b3": ["e"]})
    assert validate(net2).ok
    assert quotient_graph(net2).loop_ids == ("e",)
    assert quotient_graph(net2).edges == ()


def test_comb_map_euler_on_fixtures():
    for net in (make_y(1, 2, 3), make_delta(1, 2, 3), make_glued_tree(),
                make_shorted(), make_edgeless(2)):
        assert CombMap(net).euler_ok()


def test_comb_map_outer_face():
    cm = CombMap(make_glued_tree())
    outer = cm.outer_face(cm.faces())
    assert sorted(d[0][1] for d in outer) == [1, 2, 3, 4, 5, 6]


def test_medial_pairing_fixtures():
    assert medial_pairing(make_y(1, 2, 3)).pairs == ((1, 4), (2, 5), (3, 6))
    assert medial_pairing(make_delta(1, 2, 3)).pairs == ((1, 4), (2, 5), (3, 6))
    assert medial_pairing(make_single_edge()).pairs == ((1, 3), (2, 4))
    assert medial_pairing(make_edgeless(3)).pairs == ((1, 2), (3, 4), (5, 6))


def test_medial_pairing_glued():
    assert medial_pairing(make_glued_tree()).pairs == (
        (1, 7), (2, 6), (3, 12), (4, 5), (8, 10), (9, 11))


def test_minimality_fixtures():
    assert is_minimal(make_y(1, 2, 3))
    assert is_minimal(make_delta(1, 2, 3))
    assert is_minimal(make_glued_tree())
    assert is_minimal(make_edgeless(3))


def test_series_pair_not_minimal():
    net = CactusNetwork.build(
        2, [(1,), (2,)], ["u"],
        [("e1", ("b1", "u"), 1), ("e2", ("u", "b2"), 1)],
        {"b1": ["e1"], "b2": ["e2"], "u": ["e1", "e2"]})
    assert medial_pairing(net).pairs == ((1, 4), (2, 3))
    assert not is_minimal(net)


def test_parallel_pair_not_minimal():
    net = CactusNetwork.build(
        2, [(1,), (2,)], [],
        [("e1", ("b1", "b2"), 1), ("e2", ("b1", "b2"), 1)],
        {"b1": ["e1", "e2"], "b2": ["e2", "e1"]})
    assert validate(net).ok
    assert not is_minimal(net)


def test_medial_pairing_is_rotation_independent():
    """Electrically equivalent attachments of the glued fixture give the
    same strand pairing."""
    base = make_glued_tree()
    variant = CactusNetwork.build(
        6, base.shape, [],
        [("a", ("b1", "b4"), 1), ("b", ("b5", "b6"), 2),
         ("c", ("b1", "b3"), 3)],
        {"b1": ["c", "a"], "b3": ["c"], "b4": ["a"], "b5": ["b"],
         "b6": ["b"]},
    )
    assert validate(variant).ok
    assert medial_pairing(variant).pairs == medial_pairing(base).pairs


def test_y_delta_round_trip_exact():
    net = make_y(Fraction(1), Fraction(2), Fraction(3))
    tri = ydelta(net, "v", "ytod")
    assert validate(tri).ok
    assert tri.internal_vertices == ()
    conds = sorted(e.conductance for e in tri.edges)
    assert conds == [Fraction(1, 3), Fraction(1, 2), Fraction(1)]
    back = ydelta(tri, "b1,b2,b3", "dtoy")
    assert validate(back).ok
    assert sorted(e.conductance for e in back.edges) == [1, 2, 3]
    assert equivalence_factor(net, back) == 1


def test_y_delta_preserves_measurements_up_to_scalar():
    rng = random.Random(3)
    checked = 0
    for _ in range(40):
        n = rng.choice([3, 4])
        net = random_planar_net(rng, n, connected=True)
        if "v" not in net.internal_vertices:
            continue
        if len(net.rotations["v"]) != 3:
            continue
        out = ydelta(net, "v", "ytod")
        assert validate(out).ok
        assert equivalence_factor(net, out) is not None
        checked += 1
    assert checked >= 5


def test_y_delta_rejects_bad_sites():
    net = make_y(1, 2, 3)
    with pytest.raises(ValueError):
        ydelta(net, "b1", "ytod")
    with pytest.raises(ValueError):
        ydelta(net, "v", "sideways")
    with pytest.raises(ValueError):
        ydelta(make_delta(1, 2, 3), "b1,b2,b9", "dtoy")


def test_dual_is_involutive_up_to_equivalence():
    for net in (make_y(1, 2, 3), make_delta(1, 2, 3), make_single_edge(),
                make_glued_tree()):
        d1 = dual(net)
        assert validate(d1).ok
        d2 = dual(d1)
        assert validate(d2).ok
        # conductances return to the originals under the double dual
        assert sorted(e.conductance for e in d2.edges) == sorted(
            e.conductance for e in net.edges)


def test_dual_swaps_series_and_parallel():
    y = make_y(1, 2, 3)
    dy = dual(y)
    # the dual of a star on the boundary is a triangle with reciprocal
    # conductances
    assert dy.internal_vertices == ()
    assert sorted(e.conductance for e in dy.edges) == [
        Fraction(1, 3), Fraction(1, 2), Fraction(1)]


def test_dual_measurement_reciprocity(glued_tree):
    """The dual's measurement vector is the primal one divided by the
    product of conductances, after complement relabeling."""
    from cactusnet.combinat import enumerate_noncrossing, kreweras_complement

    for net in (make_y(1, 2, 3), glued_tree):
        lam = lambda_vector(net)
        lam_d = lambda_vector(dual(net))
        prod = net.conductance_product()
        for sigma in enumerate_noncrossing(net.n):
            assert lam_d[kreweras_complement(sigma)] == lam[sigma] / prod


def test_random_networks_validate_and_trace(rng):
    for _ in range(60):
        n = rng.choice([2, 3, 4, 5])
        net = random_planar_net(rng, n)
        assert validate(net).ok
        pairing = medial_pairing(net)
        flat = sorted(x for p in pairing.pairs for x in p)
        assert flat == list(range(1, 2 * n + 1))
