"""Shared fixtures: small reference networks and random generators."""

import random
import sys
from fractions import Fraction

import pytest

from cactusnet.network import CactusNetwork


def make_y(a, b, c):
    """Three-terminal star with one internal vertex."""
    return CactusNetwork.build(
        3, [(1,), (2,), (3,)], ["v"],
        [("e1", ("b1", "v"), Fraction(a)),
         ("e2", ("b2", "v"), Fraction(b)),
         ("e3", ("b3", "v"), Fraction(c))],
        {"b1": ["e1"], "b2": ["e2"], "b3": ["e3"], "v": ["e1", "e2", "e3"]},
    )


def make_delta(c12, c23, c31):
    """Triangle on the three boundary vertices, no internal vertices."""
    return CactusNetwork.build(
        3, [(1,), (2,), (3,)], [],
        [("d12", ("b1", "b2"), Fraction(c12)),
         ("d23", ("b2", "b3"), Fraction(c23)),
         ("d31", ("b3", "b1"), Fraction(c31))],
        {"b1": ["d12", "d31"], "b2": ["d23", "d12"], "b3": ["d31", "d23"]},
    )


def make_single_edge(c=Fraction(1)):
    return CactusNetwork.build(
        2, [(1,), (2,)], [],
        [("e", ("b1", "b2"), Fraction(c))],
        {"b1": ["e"], "b2": ["e"]},
    )


def make_edgeless(n):
    return CactusNetwork.build(n, [(i,) for i in range(1, n + 1)], [], [], {})


def make_glued_tree():
    """Six-terminal cactus: shape {1},{2,3},{4,6},{5}, three edges.

    Edge a joins label 1 to the glued pair {4,6}, edge b joins 5 to
    {4,6}, edge c joins 1 to {2,3}.  Conductances 1, 2, 3.
    """
    return CactusNetwork.build(
        6, [(1,), (2, 3), (4, 6), (5,)], [],
        [("a", ("b1", "b6"), Fraction(1)),
         ("b", ("b5", "b4"), Fraction(2)),
         ("c", ("b1", "b2"), Fraction(3))],
        {"b1": ["c", "a"], "b2": ["c"], "b4": ["b"], "b5": ["b"], "b6": ["a"]},
    )


def make_shorted():
    """Star whose terminals 1 and 3 are glued: no grove keeps all
    boundary labels apart, so the all-singletons measurement is zero."""
    return CactusNetwork.build(
        3, [(1, 3), (2,)], ["v"],
        [("e1", ("b1", "v"), Fraction(1)),
         ("e2", ("b2", "v"), Fraction(2)),
         ("e3", ("b3", "v"), Fraction(3))],
        {"b1": ["e1"], "b2": ["e2"], "b3": ["e3"], "v": ["e1", "e2", "e3"]},
    )


def make_disconnected():
    """Terminal 3 is isolated, so no grove connects all the boundary."""
    return CactusNetwork.build(
        3, [(1,), (2,), (3,)], ["v"],
        [("e1", ("b1", "v"), Fraction(1)),
         ("e2", ("b2", "v"), Fraction(2))],
        {"b1": ["e1"], "b2": ["e2"], "b3": [], "v": ["e1", "e2"]},
    )


def random_conductance(rng):
    return Fraction(rng.randint(1, 6), rng.randint(1, 4))


def random_planar_net(rng, n, connected=False):
    """A random wheel-like network: boundary polygon chords plus an
    optional hub joined to the boundary by spokes.

    With connected=True every boundary vertex keeps at least its spoke,
    so all terminals are joined through the hub.
    """
    polygon = [(i, i % n + 1) for i in range(1, n + 1)] if n >= 3 else [(1, 2)]
    keep_poly = [rng.random() < 0.6 for _ in polygon]
    keep_spoke = [connected or rng.random() < 0.6 for _ in range(n)]
    edges = []
    poly_id = {}
    for (u, v), keep in zip(polygon, keep_poly):
        if keep:
            eid = f"p{u}"
            poly_id[u] = eid
            edges.append((eid, (f"b{u}", f"b{v}"), random_conductance(rng)))
    spoke_id = {}
    for i in range(1, n + 1):
        if keep_spoke[i - 1]:
            eid = f"s{i}"
            spoke_id[i] = eid
            edges.append((eid, (f"b{i}", "v"), random_conductance(rng)))
    internal = ["v"] if spoke_id else []
    rotations = {}
    for i in range(1, n + 1):
        rot = []
        if i in poly_id:
            rot.append(poly_id[i])          # chord toward the next label
        if i in spoke_id:
            rot.append(spoke_id[i])
        prev = i - 1 if i > 1 else n
        if prev in poly_id and n >= 3:
            rot.append(poly_id[prev])       # chord toward the previous label
        rotations[f"b{i}"] = rot
    if n == 2 and 1 in poly_id:
        rotations["b2"] = ([poly_id[1]] if 1 in poly_id else []) + (
            [spoke_id[2]] if 2 in spoke_id else [])
        rotations["b1"] = ([spoke_id[1]] if 1 in spoke_id else []) + (
            [poly_id[1]] if 1 in poly_id else [])
    if internal:
        rotations["v"] = [spoke_id[i] for i in sorted(spoke_id)]
    return CactusNetwork.build(
        n, [(i,) for i in range(1, n + 1)], internal, edges, rotations)


@pytest.fixture
def y123():
    return make_y(1, 2, 3)


@pytest.fixture
def delta_recip():
    return make_delta(Fraction(1, 3), 1, Fraction(1, 2))


@pytest.fixture
def glued_tree():
    return make_glued_tree()


@pytest.fixture
def rng():
    return random.Random(20240824)


def pytest_runtest_logreport(report):
    # one visible line per acceptance criterion, independent of capture
    if report.when == "call" and "test_acceptance" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        outcome = "PASS" if report.passed else "FAIL"
        sys.stderr.write(f"[acceptance] {name}: {outcome}\n")
