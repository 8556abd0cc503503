"""Serialization round trips and deterministic output documents."""

import json
from fractions import Fraction

import pytest

from conftest import make_glued_tree, make_y, random_planar_net
from cactusnet import netfile
from cactusnet.grassmann import lam_map
from cactusnet.groves import lambda_vector
from cactusnet.linalg import RationalMatrix


def test_rational_round_trip():
    for x in (Fraction(3), Fraction(-7, 2), Fraction(0), Fraction(22, 4)):
        assert netfile.parse_rational(netfile.format_rational(x)) == x
    assert netfile.format_rational(Fraction(22, 4)) == "11/2"
    assert netfile.format_rational(Fraction(5)) == "5"


def test_network_round_trip(tmp_path, rng):
    for net in (make_y(1, 2, 3), make_glued_tree(),
                random_planar_net(rng, 4, connected=True)):
        path = tmp_path / "net.json"
        netfile.save_network(net, path)
        back = netfile.load_network(path)
        assert back.n == net.n
        assert back.shape == net.shape
        assert back.internal_vertices == net.internal_vertices
        assert back.edges == net.edges
        for v in net.vertex_names():
            assert tuple(back.rotations.get(v, ())) == tuple(
                net.rotations.get(v, ()))


def test_save_is_deterministic(tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    netfile.save_network(make_glued_tree(), p1)
    netfile.save_network(make_glued_tree(), p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_malformed_documents_rejected():
    with pytest.raises(ValueError):
        netfile.network_from_dict({"n": 2})
    with pytest.raises(ValueError):
        netfile.network_from_dict({
            "n": 2, "shape": [[1], [2]], "internal_vertices": [],
            "edges": [{"id": "e", "ends": ["b1"], "conductance": "1"}],
            "rotations": {},
        })
    with pytest.raises(ValueError):
        netfile.network_from_dict({
            "n": 2, "shape": [[1], [2]], "internal_vertices": [],
            "edges": [{"id": "e", "ends": ["b1", "b2"], "conductance": "x"}],
            "rotations": {},
        })


def test_duplicate_edge_ids_rejected():
    with pytest.raises(ValueError):
        netfile.network_from_dict({
            "n": 2, "shape": [[1], [2]], "internal_vertices": [],
            "edges": [
                {"id": "e", "ends": ["b1", "b2"], "conductance": "1"},
                {"id": "e", "ends": ["b1", "b2"], "conductance": "2"},
            ],
            "rotations": {"b1": ["e", "e"], "b2": ["e", "e"]},
        })


def test_matrix_and_exterior_docs():
    m = RationalMatrix([[Fraction(1, 2), Fraction(-3)]])
    assert netfile.matrix_to_doc(m) == [["1/2", "-3"]]
    vec = lam_map(lambda_vector(make_y(1, 2, 3)))
    doc = netfile.exterior_to_doc(vec)
    assert all("/" in v or v.lstrip("-").isdigit() for v in doc.values())
    # index sets list plain and tilde labels in circle order
    assert "1,1~,2,2~" in doc


def test_dump_document_modes():
    doc = {"b": 1, "a": 2}
    pretty = netfile.dump_document(doc)
    compact = netfile.dump_document(doc, compact=True)
    assert "\n" in pretty and "\n" not in compact
    assert json.loads(pretty) == json.loads(compact) == doc
