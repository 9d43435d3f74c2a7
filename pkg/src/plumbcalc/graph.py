"""Decorated plumbing graphs and their intersection matrices.

A plumbing graph is a connected multigraph whose vertices carry a genus, an
Euler number (the self-intersection of the exceptional curve) and a number of
arrowheads.  Everything here uses Python integers, so no computation can
overflow or lose precision.
"""
from __future__ import annotations

from collections import Counter, defaultdict, deque
from functools import lru_cache
from math import gcd
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DanglingEdge,
    DisconnectedGraph,
    DuplicateVertexId,
    InvalidGraph,
    LoopEdge,
)

CHAIN = "chain"
CYCLE = "cycle"
OTHER = "other"


@dataclass(frozen=True, order=True)
class Vertex:
    id: int
    genus: int = 0
    euler: int = -2
    arrows: int = 0


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class PlumbingGraph:
    """Immutable plumbing graph.

    Vertices are kept sorted by id and edges as a sorted tuple of ordered
    pairs, so two graphs with the same labelled structure compare equal.
    Repeated pairs in ``edges`` are parallel edges.  Construction only
    normalises; call :func:`validate` to check the invariants.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int], ...] = ()
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)
    _adj: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(
            self, "edges", tuple(sorted(_edge(int(a), int(b)) for a, b in self.edges))
        )
        object.__setattr__(self, "_index", {v.id: v for v in self.vertices})
        adj: dict[int, list[int]] = {v.id: [] for v in self.vertices}
        for a, b in self.edges:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        object.__setattr__(self, "_adj", adj)

    @classmethod
    def chain(cls, eulers: Sequence[int], arrows: Sequence[int] | None = None) -> "PlumbingGraph":
        """Genus-0 chain with vertex ids ``0..k-1`` in the given order."""
        arrows = arrows or [0] * len(eulers)
        verts = [Vertex(i, 0, e, a) for i, (e, a) in enumerate(zip(eulers, arrows))]
        return cls(tuple(verts), tuple((i, i + 1) for i in range(len(eulers) - 1)))

    @classmethod
    def cycle(cls, eulers: Sequence[int], arrows: Sequence[int] | None = None) -> "PlumbingGraph":
        """Genus-0 cycle ``0-1-...-(k-1)-0``; ``k = 2`` gives a double edge."""
        k = len(eulers)
        if k < 2:
            raise LoopEdge("a cycle needs at least 2 vertices; one vertex would need a loop")
        arrows = arrows or [0] * k
        verts = [Vertex(i, 0, e, a) for i, (e, a) in enumerate(zip(eulers, arrows))]
        return cls(tuple(verts), tuple((i, (i + 1) % k) for i in range(k)))

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(v.id for v in self.vertices)

    def vertex(self, vid: int) -> Vertex:
        return self._index[vid]

    def euler(self, vid: int) -> int:
        return self.vertex(vid).euler

    def edge_multiplicity(self) -> Counter:
        return Counter(self.edges)

    def neighbours(self, vid: int) -> list[int]:
        """Neighbours of ``vid``, repeated once per parallel edge."""
        return list(self._adj.get(vid, ()))

    def valency(self, vid: int) -> int:
        return len(self._adj.get(vid, ()))

    def replace(self, **changes) -> "PlumbingGraph":
        """Copy with per-vertex field changes: ``replace(euler={0: -3})``."""
        verts = []
        for v in self.vertices:
            kw = {name: values[v.id] for name, values in changes.items() if v.id in values}
            verts.append(Vertex(v.id, kw.get("genus", v.genus), kw.get("euler", v.euler), kw.get("arrows", v.arrows)))
        return PlumbingGraph(tuple(verts), self.edges)


def validate(graph: PlumbingGraph) -> PlumbingGraph:
    """Return ``graph`` unchanged if it is a well-formed connected plumbing graph."""
    if not graph.vertices:
        raise InvalidGraph("graph has no vertices")
    seen = set()
    for v in graph.vertices:
        if v.id in seen:
            raise DuplicateVertexId(f"vertex id {v.id} appears more than once")
        seen.add(v.id)
        if v.genus < 0 or v.arrows < 0:
            raise InvalidGraph(f"vertex {v.id} has negative genus or arrow count")
    for a, b in graph.edges:
        if a == b:
            raise LoopEdge(f"loop edge at vertex {a}")
        for end in (a, b):
            if end not in seen:
                raise DanglingEdge(f"edge ({a}, {b}) references missing vertex {end}")
    adj = _adjacency(graph)
    start = graph.vertices[0].id
    reached = {start}
    todo = deque([start])
    while todo:
        u = todo.popleft()
        for w in adj[u]:
            if w not in reached:
                reached.add(w)
                todo.append(w)
    if len(reached) != len(seen):
        missing = min(seen - reached)
        raise DisconnectedGraph(f"vertex {missing} is not connected to vertex {start}")
    return graph


def _adjacency(graph: PlumbingGraph) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = defaultdict(list)
    for a, b in graph.edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


# ---------------------------------------------------------------------------
# intersection matrix and exact linear algebra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntersectionMatrix:
    """Symmetric integer matrix; row/column ``i`` belongs to vertex ``ids[i]``."""

    ids: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.rows[self.ids.index(i)][self.ids.index(j)]

    def __len__(self):
        return len(self.ids)

    def dot(self, x: dict[int, int], y: dict[int, int]) -> int:
        """Intersection number of two divisors given as ``{id: coefficient}``."""
        total = 0
        for r, i in enumerate(self.ids):
            xi = x.get(i, 0)
            if xi:
                row = self.rows[r]
                total += xi * sum(row[c] * y.get(j, 0) for c, j in enumerate(self.ids))
        return total


def intersection_matrix(graph: PlumbingGraph) -> IntersectionMatrix:
    ids = graph.ids
    index = {vid: n for n, vid in enumerate(ids)}
    rows = [[0] * len(ids) for _ in ids]
    for v in graph.vertices:
        rows[index[v.id]][index[v.id]] = v.euler
    for a, b in graph.edges:
        rows[index[a]][index[b]] += 1
        rows[index[b]][index[a]] += 1
    return IntersectionMatrix(ids, tuple(tuple(r) for r in rows))


def _sparse_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by integer elimination on sparse rows.

    Only rows with a non-zero entry in the pivot column are touched.  Each
    update ``r_i <- piv * r_i - lead * r_k`` scales the determinant by ``piv``
    and dividing a row by its content ``g`` scales it by ``1/g``; both
    factors are accumulated and undone exactly at the end.
    """
    n = len(rows)
    a = [{j: x for j, x in enumerate(r) if x} for r in rows]
    # col_rows[j]: rows with a non-zero entry in column j
    col_rows: list[set[int]] = [set() for _ in range(n)]
    for i, r in enumerate(a):
        for j in r:
            col_rows[j].add(i)

    def move(i: int, old: dict, new: dict) -> None:
        for c in old:
            if c not in new:
                col_rows[c].discard(i)
        for c in new:
            col_rows[c].add(i)

    sign = 1
    num = 1  # product of contents divided out
    den = 1  # product of pivots multiplied in
    diag = 1
    for k in range(n):
        below = sorted(i for i in col_rows[k] if i > k)
        if k not in a[k]:
            if not below:
                return 0
            swap = below.pop(0)
            rk_old, rs_old = a[k], a[swap]
            move(k, rk_old, rs_old)
            move(swap, rs_old, rk_old)
            a[k], a[swap] = rs_old, rk_old
            sign = -sign
        rk = a[k]
        piv = rk[k]
        diag *= piv
        tail = {j: x for j, x in rk.items() if j > k}
        for i in below:
            ri = a[i]
            lead = ri[k]
            new = {c: x * piv for c, x in ri.items() if c != k}
            for c, x in tail.items():
                new[c] = new.get(c, 0) - lead * x
            new = {c: x for c, x in new.items() if x}
            g = 0
            for x in new.values():
                g = gcd(g, x)
            if g > 1:
                new = {c: x // g for c, x in new.items()}
                num *= g
            den *= piv
            move(i, ri, new)
            a[i] = new
    det, rem = divmod(sign * diag * num, den)
    assert rem == 0
    return det


def _pivot_signs_positive(rows: Sequence[Sequence[int]]) -> bool:
    """Symmetric elimination without pivoting, integer rows, stops at the first pivot <= 0.

    Rows are only ever multiplied by the (positive) current pivot and
    divided by their content, so the sign of the k-th pivot equals the sign
    of the ratio of consecutive leading principal minors.
    """
    n = len(rows)
    a = [{j: x for j, x in enumerate(r) if x} for r in rows]
    for k in range(n):
        rk = a[k]
        piv = rk.get(k, 0)
        if piv <= 0:
            return False
        below = {j: x for j, x in rk.items() if j > k}
        for j in below:
            ri = a[j]
            lead = ri.pop(k, 0)
            if not lead:
                continue
            new = {c: x * piv for c, x in ri.items()}
            for c, x in below.items():
                new[c] = new.get(c, 0) - lead * x
            new = {c: x for c, x in new.items() if x}
            g = 0
            for x in new.values():
                g = gcd(g, x)
            a[j] = {c: x // g for c, x in new.items()} if g > 1 else new
    return True


def is_negative_definite(matrix: IntersectionMatrix | Sequence[Sequence[int]]) -> bool:
    """True iff every leading principal minor of ``-M`` is positive."""
    rows = matrix.rows if isinstance(matrix, IntersectionMatrix) else matrix
    return _pivot_signs_positive([[-x for x in r] for r in rows])


def leading_minors(matrix: IntersectionMatrix | Sequence[Sequence[int]]) -> list[int]:
    """Leading principal minors of ``-M`` (all of them, computed exactly)."""
    rows = matrix.rows if isinstance(matrix, IntersectionMatrix) else matrix
    neg = [[-x for x in r] for r in rows]
    n = len(neg)
    out = []
    for k in range(1, n + 1):
        sub = [r[:k] for r in neg[:k]]
        out.append(_sparse_det(sub))
    return out


def determinant(matrix: IntersectionMatrix | Sequence[Sequence[int]]) -> int:
    rows = matrix.rows if isinstance(matrix, IntersectionMatrix) else matrix
    return _sparse_det(rows)


def abs_determinant(matrix: IntersectionMatrix | Sequence[Sequence[int]]) -> int:
    return abs(determinant(matrix))


# ---------------------------------------------------------------------------
# shapes and canonical forms
# ---------------------------------------------------------------------------


def dihedral_images(seq: Sequence) -> Iterable[tuple[str, tuple]]:
    """Yield ``(label, image)`` for every rotation and reflection of a cyclic sequence."""
    seq = tuple(seq)
    n = len(seq)
    rev = seq[::-1]
    for r in range(n):
        yield f"rotate {r}", seq[r:] + seq[:r]
    for r in range(n):
        yield f"reflect, rotate {r}", rev[r:] + rev[:r]


def dihedral_min(seq: Sequence) -> tuple:
    return min(img for _, img in dihedral_images(seq))


def chain_min(seq: Sequence) -> tuple:
    seq = tuple(seq)
    return min(seq, seq[::-1])


@dataclass(frozen=True)
class Shape:
    """Result of :func:`shape_classify`.

    ``order`` is the canonical vertex-id sequence for chains and cycles and
    empty for other graphs.
    """

    kind: str
    order: tuple[int, ...] = field(default=())

    def __len__(self):
        return len(self.order)


def _decoration(v: Vertex) -> tuple[int, int, int]:
    return (v.euler, v.genus, v.arrows)


@lru_cache(maxsize=8192)
def shape_classify(graph: PlumbingGraph) -> Shape:
    """Classify a validated graph as a chain, a cycle, or neither.

    Chains are oriented so that the sequence of ``(euler, genus, arrows)``
    is lexicographically smallest; cycles pick the smallest rotation or
    reflection.  Ties (symmetric decorations) are broken by vertex ids.
    """
    n = len(graph.vertices)
    mult = graph.edge_multiplicity()
    adj = _adjacency(graph)
    degrees = [len(adj[v.id]) for v in graph.vertices]
    deco = {v.id: _decoration(v) for v in graph.vertices}

    if len(graph.edges) == n - 1 and all(m == 1 for m in mult.values()) and max(degrees, default=0) <= 2:
        if n == 1:
            return Shape(CHAIN, (graph.vertices[0].id,))
        start = min(v.id for v in graph.vertices if len(adj[v.id]) == 1)
        order = [start]
        prev = None
        while len(order) < n:
            cur = order[-1]
            nxt = [w for w in adj[cur] if w != prev]
            prev = cur
            order.append(nxt[0])
        fwd, bwd = tuple(order), tuple(reversed(order))
        best = min((tuple(deco[i] for i in o), o) for o in (fwd, bwd))
        return Shape(CHAIN, best[1])

    if n >= 2 and len(graph.edges) == n and all(d == 2 for d in degrees):
        start = min(graph.ids)
        if n == 2:
            order = [start, adj[start][0]]
        else:
            order = [start]
            prev = None
            while len(order) < n:
                cur = order[-1]
                nxt = [w for w in adj[cur] if w != prev]
                prev = cur
                order.append(nxt[0])
        best = min((tuple(deco[i] for i in img), img) for _, img in dihedral_images(order))
        return Shape(CYCLE, best[1])

    return Shape(OTHER)


def walk_order(graph: PlumbingGraph) -> tuple[int, ...]:
    """Chain or cycle vertices in walking order, starting from the smallest id
    (the smallest-id end for chains) and heading to its smaller neighbour."""
    shape = shape_classify(graph)
    if shape.kind == OTHER:
        raise InvalidGraph("graph is neither a chain nor a cycle")
    order = shape.order
    if shape.kind == CHAIN:
        return min(order, order[::-1], key=lambda o: o[0])
    return min((img for _, img in dihedral_images(order) if img[0] == min(order)), key=lambda o: o[1:])


def canonical_form(graph: PlumbingGraph) -> tuple:
    """Hashable key, equal for two chains or cycles iff they are isomorphic.

    Other shapes fall back to the sorted decorations and edge list, which is
    only label-sensitive; it is never used to compare them.
    """
    shape = shape_classify(graph)
    if shape.kind in (CHAIN, CYCLE):
        return (shape.kind, tuple(_decoration(graph.vertex(i)) for i in shape.order))
    return (OTHER, tuple(_decoration(v) for v in graph.vertices), graph.edges)


def euler_sequence(graph: PlumbingGraph) -> tuple[int, ...]:
    """Euler numbers in canonical shape order (chains and cycles only)."""
    shape = shape_classify(graph)
    if shape.kind == OTHER:
        raise InvalidGraph("graph is neither a chain nor a cycle")
    return tuple(graph.euler(i) for i in shape.order)


def relabel(graph: PlumbingGraph, mapping: dict[int, int]) -> PlumbingGraph:
    verts = tuple(Vertex(mapping[v.id], v.genus, v.euler, v.arrows) for v in graph.vertices)
    edges = tuple((mapping[a], mapping[b]) for a, b in graph.edges)
    return PlumbingGraph(verts, edges)
