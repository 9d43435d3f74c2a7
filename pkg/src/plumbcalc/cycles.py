"""Fundamental cycle (Laufer's algorithm), anti-degrees and the taut maximal cycle."""
from __future__ import annotations

import heapq
from dataclasses import dataclass

from .cusp import is_cusp_graph
from .errors import NotNegativeDefinite, NotTautClass, ReducednessViolated
from .graph import PlumbingGraph, intersection_matrix, is_negative_definite
from .lens import is_lens_graph

Divisor = dict[int, int]

HJ = "hirzebruch-jung"
CUSP = "cusp"


def taut_kind(graph: PlumbingGraph) -> str | None:
    """``HJ`` for minimal lens chains, ``CUSP`` for cusp cycles, else ``None``."""
    if is_lens_graph(graph):
        return HJ
    if is_cusp_graph(graph):
        return CUSP
    return None


def _step_cap(graph: PlumbingGraph) -> int:
    return 64 * sum(abs(v.euler) for v in graph.vertices) * len(graph.vertices)


def fundamental_cycle(graph: PlumbingGraph, *, largest_first: bool = False) -> Divisor:
    """Laufer's algorithm, started at the reduced cycle.

    While some ``z . E_j > 0``, add ``E_j`` for the smallest such ``j``
    (largest with ``largest_first``; the answer does not depend on it).
    """
    if not is_negative_definite(intersection_matrix(graph)):
        raise NotNegativeDefinite("intersection matrix is not negative definite")
    sign = -1 if largest_first else 1
    z = {v.id: 1 for v in graph.vertices}
    # prod[j] = z . E_j
    prod = {v.id: v.euler + graph.valency(v.id) for v in graph.vertices}
    nbrs = {v.id: graph.neighbours(v.id) for v in graph.vertices}
    heap = [sign * j for j, x in prod.items() if x > 0]
    heapq.heapify(heap)
    cap = _step_cap(graph)
    steps = 0
    while heap:
        j = sign * heapq.heappop(heap)
        if prod[j] <= 0:
            continue
        steps += 1
        if steps > cap:
            raise NotNegativeDefinite(f"Laufer iteration exceeded {cap} steps")
        z[j] += 1
        prod[j] += graph.euler(j)
        for i in nbrs[j]:
            prod[i] += 1
            if prod[i] == 1:
                heapq.heappush(heap, sign * i)
        if prod[j] > 0:
            heapq.heappush(heap, sign * j)
    return z


def anti_degrees(graph: PlumbingGraph, z: Divisor) -> dict[int, int]:
    """``k_i = -(z . E_i)`` for every vertex."""
    out = {}
    for v in graph.vertices:
        out[v.id] = -(v.euler * z.get(v.id, 0) + sum(z.get(j, 0) for j in graph.neighbours(v.id)))
    return out


@dataclass(frozen=True)
class CycleReport:
    z_min: Divisor
    k: dict[int, int]
    reduced: bool


def maximal_cycle_taut(graph: PlumbingGraph) -> CycleReport:
    """Maximal cycle of a Hirzebruch-Jung or cusp graph.

    For these taut classes it equals the fundamental cycle and is reduced.
    """
    if taut_kind(graph) is None:
        raise NotTautClass("expected a minimal Hirzebruch-Jung chain or a cusp cycle")
    z = fundamental_cycle(graph)
    reduced = all(a == 1 for a in z.values())
    if not reduced:
        raise ReducednessViolated(f"fundamental cycle {z} of a taut graph is not reduced")
    return CycleReport(z, anti_degrees(graph, z), reduced)


def decorate_with_arrows(graph: PlumbingGraph) -> PlumbingGraph:
    """Copy of ``graph`` carrying ``k_i`` arrows at every vertex."""
    report = maximal_cycle_taut(graph)
    return graph.replace(arrows=report.k)
