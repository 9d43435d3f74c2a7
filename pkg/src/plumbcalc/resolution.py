"""Blow-ups, blow-downs and the resolution with a central vertex on every string."""
from __future__ import annotations

from dataclasses import dataclass

from .bnp import split_strings, string_decomposition
from .cycles import anti_degrees, fundamental_cycle, taut_kind
from .errors import LastVertex, MalformedString, NoSuchSite, NotBlowDownable, NotMinimal, NotTautClass
from .graph import CHAIN, CYCLE, PlumbingGraph, Vertex, shape_classify


@dataclass(frozen=True)
class EdgePoint:
    a: int
    b: int


@dataclass(frozen=True)
class FreePoint:
    a: int


BlowUpSite = EdgePoint | FreePoint


def blow_up(graph: PlumbingGraph, site: BlowUpSite) -> PlumbingGraph:
    """Blow up a double point (``EdgePoint``) or a smooth point (``FreePoint``).

    The new (-1)-vertex gets id ``max(ids) + 1``.
    """
    ids = set(graph.ids)
    new = max(ids) + 1
    edges = list(graph.edges)
    if isinstance(site, EdgePoint):
        e = (min(site.a, site.b), max(site.a, site.b))
        if e not in edges:
            raise NoSuchSite(f"no edge between {site.a} and {site.b}")
        edges.remove(e)
        edges += [(site.a, new), (new, site.b)]
        touched = {site.a: graph.euler(site.a) - 1, site.b: graph.euler(site.b) - 1}
    elif isinstance(site, FreePoint):
        if site.a not in ids:
            raise NoSuchSite(f"no vertex {site.a}")
        edges.append((site.a, new))
        touched = {site.a: graph.euler(site.a) - 1}
    else:
        raise TypeError(f"unknown blow-up site {site!r}")
    verts = [Vertex(v.id, v.genus, touched.get(v.id, v.euler), v.arrows) for v in graph.vertices]
    verts.append(Vertex(new, 0, -1, 0))
    return PlumbingGraph(tuple(verts), tuple(edges))


def _blow_down_problem(graph: PlumbingGraph, vid: int) -> str | None:
    v = graph.vertex(vid)
    if v.genus != 0 or v.euler != -1 or v.arrows != 0:
        return f"vertex {vid} is not a genus-0 (-1)-curve without arrows"
    val = graph.valency(vid)
    if val > 2:
        return f"vertex {vid} has valency {val} > 2"
    nb = graph.neighbours(vid)
    if val == 2 and nb[0] == nb[1]:
        return f"blowing down vertex {vid} would create a loop at {nb[0]}"
    return None


def blow_down(graph: PlumbingGraph, vid: int) -> PlumbingGraph:
    if vid not in graph.ids:
        raise NoSuchSite(f"no vertex {vid}")
    if len(graph.vertices) == 1:
        raise LastVertex(f"vertex {vid} is the only vertex")
    problem = _blow_down_problem(graph, vid)
    if problem:
        raise NotBlowDownable(problem)
    nb = graph.neighbours(vid)
    edges = [e for e in graph.edges if vid not in e]
    if len(nb) == 2:
        edges.append((nb[0], nb[1]))
    verts = [
        Vertex(v.id, v.genus, v.euler + nb.count(v.id), v.arrows)
        for v in graph.vertices
        if v.id != vid
    ]
    return PlumbingGraph(tuple(verts), tuple(edges))


def is_minimal(graph: PlumbingGraph) -> bool:
    """False if some genus-0 (-1)-curve without arrows has valency <= 2.

    An isolated (-1)-vertex also counts as non-minimal even though
    :func:`blow_down` refuses to remove the last vertex.
    """
    for v in graph.vertices:
        if v.genus == 0 and v.euler == -1 and v.arrows == 0 and graph.valency(v.id) <= 2:
            nb = graph.neighbours(v.id)
            if len(nb) < 2 or nb[0] != nb[1]:
                return False
    return True


def pi_tilde(graph: PlumbingGraph) -> PlumbingGraph:
    """Blow up the middle edge of every string with an even number of inner (-2)-curves."""
    shape = shape_classify(graph)
    if shape.kind not in (CHAIN, CYCLE) or any(v.genus for v in graph.vertices):
        raise NotTautClass("expected a genus-0 chain or cycle")
    if not is_minimal(graph) or any(v.euler > -1 for v in graph.vertices):
        raise NotMinimal("the resolution is not minimal; blow down first")
    if taut_kind(graph) is None:
        raise NotTautClass("expected a minimal Hirzebruch-Jung chain or a cusp cycle")
    out = graph
    for span in string_decomposition(graph):
        if span.n % 2 == 0:
            half = span.n // 2
            out = blow_up(out, EdgePoint(span.path[half], span.path[half + 1]))
    return out


def tilde_strings(graph_tilde: PlumbingGraph):
    """L-nodes and strings of a modified resolution graph.

    L-nodes are recognised as the vertices meeting the fundamental cycle
    negatively, which survives the blow-ups (Euler numbers do not).
    """
    shape = shape_classify(graph_tilde)
    if shape.kind not in (CHAIN, CYCLE):
        raise NotTautClass("expected a chain or a cycle")
    k = anti_degrees(graph_tilde, fundamental_cycle(graph_tilde))
    marked = {i for i in shape.order if k[i] > 0}
    return [i for i in shape.order if i in marked], split_strings(shape.order, shape.kind == CYCLE, marked)


def central_vertices(graph_tilde: PlumbingGraph) -> list[int]:
    """Special P-nodes: the middle vertex of every string of ``pi_tilde(graph)``."""
    _, spans = tilde_strings(graph_tilde)
    out = []
    for span in spans:
        if span.n % 2 == 0:
            raise MalformedString(f"string {span.path} has an even number of inner vertices")
        out.append(span.interior[span.n // 2])
    return out
