"""JSON and DOT encodings of graphs, divisors and descriptors."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .bnp import BnpDescriptor, LNodeRecord, StringRecord
from .errors import InvalidGraph
from .graph import PlumbingGraph, Vertex

GRAPH_FORMAT = "plumbing-graph/v1"
DIVISOR_FORMAT = "divisor/v1"
DESCRIPTOR_FORMAT = "bnp-descriptor/v1"


def graph_to_dict(graph: PlumbingGraph) -> dict[str, Any]:
    return {
        "format": GRAPH_FORMAT,
        "vertices": [
            {"id": v.id, "genus": v.genus, "euler": v.euler, "arrows": v.arrows} for v in graph.vertices
        ],
        "edges": [list(e) for e in graph.edges],
    }


def graph_from_dict(data: dict[str, Any]) -> PlumbingGraph:
    if data.get("format") != GRAPH_FORMAT:
        raise InvalidGraph(f"expected format {GRAPH_FORMAT!r}, got {data.get('format')!r}")
    try:
        verts = tuple(
            Vertex(int(v["id"]), int(v.get("genus", 0)), int(v["euler"]), int(v.get("arrows", 0)))
            for v in data["vertices"]
        )
        edges = tuple((int(a), int(b)) for a, b in data.get("edges", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidGraph(f"malformed graph JSON: {exc}") from exc
    return PlumbingGraph(verts, edges)


def divisor_to_dict(z: dict[int, int]) -> dict[str, Any]:
    return {"format": DIVISOR_FORMAT, "coefficients": {str(k): z[k] for k in sorted(z)}}


def divisor_from_dict(data: dict[str, Any]) -> dict[int, int]:
    return {int(k): int(v) for k, v in data["coefficients"].items()}


def _rate(x: Fraction) -> str:
    return str(x)


def descriptor_to_dict(d: BnpDescriptor) -> dict[str, Any]:
    return {
        "format": DESCRIPTOR_FORMAT,
        "shape": d.shape,
        "lnodes": [
            {"vertex": n.vertex_id, "euler": n.euler, "valency": n.valency, "curvettes": n.curvettes}
            for n in d.lnodes
        ],
        "strings": [{"n": s.n, "inner_rate": _rate(s.inner_rate)} for s in d.strings],
    }


def descriptor_from_dict(data: dict[str, Any]) -> BnpDescriptor:
    lnodes = tuple(LNodeRecord(n["vertex"], n["euler"], n["valency"], n["curvettes"]) for n in data["lnodes"])
    strings = []
    for s in data["strings"]:
        rec = StringRecord(int(s["n"]))
        if "inner_rate" in s and Fraction(s["inner_rate"]) != rec.inner_rate:
            raise ValueError(f"inner rate {s['inner_rate']} does not match n = {rec.n}")
        strings.append(rec)
    return BnpDescriptor(data["shape"], lnodes, tuple(strings))


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def graph_to_dot(graph: PlumbingGraph, name: str = "plumbing") -> str:
    """Graphviz source; plumbing edges are undirected, arrowheads point to dots."""
    lines = [f"digraph {name} {{"]
    for v in graph.vertices:
        lines.append(f'  v{v.id} [label="{v.id} / e={v.euler} g={v.genus}"];')
    for a, b in graph.edges:
        lines.append(f"  v{a} -> v{b} [dir=none];")
    for v in graph.vertices:
        for k in range(v.arrows):
            lines.append(f'  a{v.id}_{k} [shape=point, label=""];')
            lines.append(f"  v{v.id} -> a{v.id}_{k};")
    lines.append("}")
    return "\n".join(lines) + "\n"
