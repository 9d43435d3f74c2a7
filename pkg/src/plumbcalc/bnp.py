"""Thick-thin data of Hirzebruch-Jung and cusp singularities.

The descriptor built here lists the L-nodes (with the number of curvettes
of a generic linear form through each) alternating with the strings of
(-2)-curves joining them (with the inner rate ``(n + 3) / 2`` of their
central vertex).  Two taut germs are inner bilipschitz equivalent exactly
when their descriptors agree up to the symmetries of the chain or cycle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cusp import cusp_graph, cusp_reverse_orientation, cusp_word
from .cycles import CUSP, HJ, maximal_cycle_taut, taut_kind
from .errors import InternalConsistencyError, NotTautClass, Unsupported, UnrepresentableCusp
from .graph import CHAIN, CYCLE, PlumbingGraph, canonical_form, dihedral_images, shape_classify
from .lens import graph_to_lens, lens_graph, lens_reverse_orientation


@dataclass(frozen=True)
class StringSpan:
    """Path between two consecutive L-nodes (equal for a one-node cycle)."""

    start: int
    interior: tuple[int, ...]
    end: int

    @property
    def n(self) -> int:
        return len(self.interior)

    @property
    def path(self) -> tuple[int, ...]:
        return (self.start, *self.interior, self.end)


@dataclass(frozen=True)
class LNodeRecord:
    vertex_id: int = field(compare=False)
    euler: int = field(compare=False)
    valency: int
    curvettes: int


@dataclass(frozen=True)
class StringRecord:
    n: int

    @property
    def inner_rate(self) -> Fraction:
        return Fraction(self.n + 3, 2)


@dataclass(frozen=True)
class BnpDescriptor:
    """``lnodes[i]`` precedes ``strings[i]``; chains have one more L-node than strings."""

    shape: str
    lnodes: tuple[LNodeRecord, ...]
    strings: tuple[StringRecord, ...]

    def __post_init__(self):
        s = len(self.strings)
        if self.shape == CHAIN and len(self.lnodes) != s + 1:
            raise ValueError("a chain descriptor has one more L-node than strings")
        if self.shape == CYCLE and (len(self.lnodes) != s or s < 1):
            raise ValueError("a cycle descriptor has as many L-nodes as strings, at least one")

    def tokens(self) -> tuple:
        out: list = []
        for i, node in enumerate(self.lnodes):
            out.append(("L", node.valency, node.curvettes))
            if i < len(self.strings):
                out.append(("S", self.strings[i].n))
        return tuple(out)

    def word(self) -> tuple[tuple[int, int], ...]:
        """Flattened ``(curvettes, n)`` pairs of a cycle descriptor."""
        return tuple((l.curvettes, s.n) for l, s in zip(self.lnodes, self.strings))

    def rates(self) -> list[Fraction]:
        return [s.inner_rate for s in self.strings]

    def __str__(self):
        parts = []
        for tok in self.tokens():
            if tok[0] == "L":
                parts.append(f"L({tok[2]})")
            else:
                parts.append(f"S({Fraction(tok[1] + 3, 2)})")
        prefix = "cyclic " if self.shape == CYCLE else ""
        return prefix + " ".join(parts)


def split_strings(order: tuple[int, ...], cyclic: bool, marked: set[int]) -> list[StringSpan]:
    """Cut a chain or cycle (vertex ``order``) at the ``marked`` vertices."""
    if cyclic:
        first = next(i for i, v in enumerate(order) if v in marked)
        rot = order[first:] + order[:first]
        spans = []
        interior: list[int] = []
        start = rot[0]
        for v in rot[1:] + (rot[0],):
            if v in marked:
                spans.append(StringSpan(start, tuple(interior), v))
                start, interior = v, []
            else:
                interior.append(v)
        return spans
    pos = [i for i, v in enumerate(order) if v in marked]
    return [StringSpan(order[a], tuple(order[a + 1 : b]), order[b]) for a, b in zip(pos, pos[1:])]


def _l_nodes(graph: PlumbingGraph, k: dict[int, int]) -> list[int]:
    shape = shape_classify(graph)
    found = [i for i in shape.order if k[i] > 0]
    expected = {v.id for v in graph.vertices if v.euler <= -3}
    if shape.kind == CHAIN:
        expected |= {shape.order[0], shape.order[-1]}
    if set(found) != expected:
        raise InternalConsistencyError(f"L-nodes {found} differ from the combinatorial set {sorted(expected)}")
    return found


def l_nodes(graph: PlumbingGraph) -> list[int]:
    """L-nodes in canonical shape order: vertices with positive anti-degree.

    Checked against the direct description (Euler number <= -3, or an end
    of a chain).
    """
    return _l_nodes(graph, maximal_cycle_taut(graph).k)


def _strings(graph: PlumbingGraph, lnodes: list[int]) -> list[StringSpan]:
    shape = shape_classify(graph)
    return split_strings(shape.order, shape.kind == CYCLE, set(lnodes))


def string_decomposition(graph: PlumbingGraph) -> list[StringSpan]:
    return _strings(graph, l_nodes(graph))


def inner_rates(graph: PlumbingGraph) -> list[Fraction]:
    return [Fraction(s.n + 3, 2) for s in string_decomposition(graph)]


def _canonical_cycle(lnodes: list[LNodeRecord], strings: list[StringRecord]):
    """Rotate/reflect a cyclic descriptor to minimise its ``(curvettes, n)`` word.

    Reflecting the alternating cycle ``L1 S1 L2 S2 ... Ls Ss`` from ``L1``
    reads ``L1 Ss Ls ... S1``.
    """
    s = len(lnodes)
    candidates = []
    for r in range(s):
        ls = lnodes[r:] + lnodes[:r]
        ss = strings[r:] + strings[:r]
        candidates.append((ls, ss))
        rl = [lnodes[(r - i) % s] for i in range(s)]
        rs = [strings[(r - i - 1) % s] for i in range(s)]
        candidates.append((rl, rs))
    return min(candidates, key=lambda c: [(l.curvettes, t.n) for l, t in zip(*c)])


def bnp_descriptor(graph: PlumbingGraph) -> BnpDescriptor:
    report = maximal_cycle_taut(graph)
    shape = shape_classify(graph)
    order = _l_nodes(graph, report.k)
    spans = _strings(graph, order)
    records = [LNodeRecord(i, graph.euler(i), graph.valency(i), report.k[i]) for i in order]
    for rec in records:
        if rec.curvettes != -rec.euler - rec.valency:
            raise InternalConsistencyError(f"curvette count mismatch at vertex {rec.vertex_id}")
    strings = [StringRecord(s.n) for s in spans]
    if shape.kind == CYCLE:
        records, strings = _canonical_cycle(records, strings)
    return BnpDescriptor(shape.kind, tuple(records), tuple(strings))


def bnp_match(a: BnpDescriptor, b: BnpDescriptor) -> str | None:
    """Name of a symmetry carrying ``b`` onto ``a``, or ``None``."""
    if a.shape != b.shape:
        return None
    ta, tb = a.tokens(), b.tokens()
    if a.shape == CHAIN:
        if ta == tb:
            return "identity"
        if ta == tb[::-1]:
            return "reversal"
        return None
    if len(ta) != len(tb):
        return None
    for label, image in dihedral_images(tb):
        if image[0][0] == "L" and image == ta:
            return label
    return None


def bnp_equal(a: BnpDescriptor, b: BnpDescriptor) -> bool:
    return bnp_match(a, b) is not None


# ---------------------------------------------------------------------------
# comparison of two graphs
# ---------------------------------------------------------------------------

ORIENTED = "OrientedHomeo"
UNORIENTED_ONLY = "UnorientedHomeoOnly"
NOT_HOMEO = "NotHomeomorphic"
BILIP_EQUIVALENT = "BilipschitzEquivalent"
BILIP_DISTINCT = "BilipschitzDistinct"


@dataclass(frozen=True)
class Verdict:
    topology: str
    bilipschitz: str
    witness: str | None = None

    def labels(self) -> list[str]:
        return [self.topology, self.bilipschitz]


def orientation_reversed(graph: PlumbingGraph) -> PlumbingGraph | None:
    """Minimal graph of the same link with reversed orientation.

    ``None`` when it is a one-vertex cusp cycle, which has no loop-free
    representation.
    """
    kind = taut_kind(graph)
    if kind == HJ:
        return lens_graph(lens_reverse_orientation(graph_to_lens(graph)))
    if kind == CUSP:
        try:
            return cusp_graph(cusp_reverse_orientation(cusp_word(graph)))
        except UnrepresentableCusp:
            return None
    raise NotTautClass("expected a minimal Hirzebruch-Jung chain or a cusp cycle")


def compare(g1: PlumbingGraph, g2: PlumbingGraph) -> Verdict:
    k1, k2 = taut_kind(g1), taut_kind(g2)
    if k1 is None or k2 is None:
        raise Unsupported("compare needs minimal Hirzebruch-Jung chains or cusp cycles")
    same = canonical_form(g1) == canonical_form(g2)
    if k1 != k2:
        topology = NOT_HOMEO
    elif same:
        topology = ORIENTED
    else:
        rev = orientation_reversed(g2)
        if rev is not None and canonical_form(rev) == canonical_form(g1):
            topology = UNORIENTED_ONLY
        else:
            topology = NOT_HOMEO
    witness = bnp_match(bnp_descriptor(g1), bnp_descriptor(g2))
    if same and witness is None:
        raise InternalConsistencyError("equal minimal graphs with different descriptors")
    bilip = BILIP_EQUIVALENT if witness is not None else BILIP_DISTINCT
    return Verdict(topology, bilip, witness)


def rate_multiset(d: BnpDescriptor) -> tuple[Fraction, ...]:
    return tuple(sorted(d.rates()))
