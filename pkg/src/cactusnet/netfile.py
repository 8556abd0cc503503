"""Reading and writing network files and structured output documents.

Network files are JSON with keys n, shape, internal_vertices, edges,
rotations; boundary vertices are named "b1".."bn" and rationals are
serialized as "p" or "p/q" in lowest terms.  Output documents reuse the
same rational encoding; exterior vector keys are index-set strings like
"1,1~,2" listing ground elements in circle order.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .combinat import NoncrossingPartition, format_element
from .grassmann import ExteriorVector
from .linalg import RationalMatrix
from .network import CactusNetwork


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(str(s).strip())


def load_network(path: str) -> CactusNetwork:
    with open(path) as fh:
        doc = json.load(fh)
    return network_from_dict(doc)


def network_from_dict(doc: dict) -> CactusNetwork:
    try:
        n = int(doc["n"])
        shape = [tuple(int(x) for x in b) for b in doc["shape"]]
        internal = [str(v) for v in doc["internal_vertices"]]
        edges = [
            (str(e["id"]), (str(e["ends"][0]), str(e["ends"][1])),
             parse_rational(e["conductance"]))
            for e in doc["edges"]
        ]
        rotations = {
            str(v): [str(x) for x in ids] for v, ids in doc["rotations"].items()
        }
    except (KeyError, IndexError, TypeError, ValueError,
            ZeroDivisionError) as exc:
        raise ValueError(f"malformed network file: {exc}") from exc
    ids = [e[0] for e in edges]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate edge ids")
    return CactusNetwork.build(n, shape, internal, edges, rotations)


def network_to_dict(net: CactusNetwork) -> dict:
    return {
        "n": net.n,
        "shape": [list(b) for b in net.shape],
        "internal_vertices": list(net.internal_vertices),
        "edges": [
            {
                "id": e.id,
                "ends": list(e.ends),
                "conductance": format_rational(e.conductance),
            }
            for e in net.edges
        ],
        "rotations": {v: list(net.rotations.get(v, ())) for v in net.vertex_names()},
    }


def save_network(net: CactusNetwork, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(network_to_dict(net), fh, indent=2)
        fh.write("\n")


def matrix_to_doc(m: RationalMatrix):
    return [[format_rational(x) for x in row] for row in m.rows]


def index_set_string(n: int, positions) -> str:
    """Render a tuple of circle positions, e.g. (0, 1, 2) -> "1,1~,2"."""
    labels = []
    for p in sorted(positions):
        i = p // 2 + 1
        labels.append(format_element(n, i if p % 2 == 0 else n + i))
    return ",".join(labels)


def exterior_to_doc(vec: ExteriorVector) -> dict:
    return {
        index_set_string(vec.n, key): format_rational(val)
        for key, val in sorted(vec.coords.items())
    }


def partition_string(sigma: NoncrossingPartition) -> str:
    return str(sigma)


def dump_document(doc, compact: bool = False) -> str:
    if compact:
        return json.dumps(doc, separators=(",", ":"))
    return json.dumps(doc, indent=2)
