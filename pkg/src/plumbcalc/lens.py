"""Lens spaces, negative continued fractions and their chain graphs."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import InternalConsistencyError, InvalidParams, NotALensGraph
from .graph import CHAIN, PlumbingGraph, canonical_form, shape_classify


@dataclass(frozen=True, order=True)
class LensParams:
    """Coprime pair ``p > q >= 1`` labelling the lens space L(p, q)."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if not (isinstance(p, int) and isinstance(q, int)):
            raise InvalidParams(f"p and q must be integers, got {p!r}, {q!r}")
        if p < 2:
            raise InvalidParams(f"p must be at least 2, got {p}")
        if not 1 <= q < p:
            raise InvalidParams(f"q must satisfy 1 <= q < p, got q={q}, p={p}")
        if gcd(p, q) != 1:
            raise InvalidParams(f"gcd({p}, {q}) = {gcd(p, q)} != 1")


@dataclass(frozen=True)
class NegContFrac:
    terms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise InvalidParams("a continued fraction needs at least one term")
        bad = [b for b in self.terms if b < 2]
        if bad:
            raise InvalidParams(f"all terms must be >= 2, got {bad[0]}")


def neg_cont_frac(params: LensParams) -> NegContFrac:
    """Expand p/q = b1 - 1/(b2 - 1/(... - 1/bk)) with every bi >= 2."""
    p, q = params.p, params.q
    terms = []
    while q:
        b = -(-p // q)
        terms.append(b)
        p, q = q, b * q - p
    return NegContFrac(tuple(terms))


def eval_cont_frac(cf: NegContFrac | Sequence[int]) -> LensParams:
    terms = cf.terms if isinstance(cf, NegContFrac) else NegContFrac(tuple(cf)).terms
    value = Fraction(terms[-1])
    for b in reversed(terms[:-1]):
        value = b - 1 / value
    return LensParams(value.numerator, value.denominator)


def lens_graph(params: LensParams) -> PlumbingGraph:
    """Minimal plumbing graph of L(p, q): the chain -b1, ..., -bk."""
    return PlumbingGraph.chain([-b for b in neg_cont_frac(params).terms])


def is_lens_graph(graph: PlumbingGraph) -> bool:
    """Genus-0 chain with every Euler number <= -2 (minimal Hirzebruch-Jung graph)."""
    if any(v.genus != 0 or v.euler > -2 for v in graph.vertices):
        return False
    return shape_classify(graph).kind == CHAIN


def graph_to_lens_both(graph: PlumbingGraph) -> tuple[LensParams, LensParams]:
    """Both readings of a lens chain: canonical order first, then reversed.

    The two answers are (p, q) and (p, q*) with q q* = 1 mod p.
    """
    if not is_lens_graph(graph):
        raise NotALensGraph("expected a genus-0 chain with all Euler numbers <= -2")
    order = shape_classify(graph).order
    terms = [-graph.euler(i) for i in order]
    fwd = eval_cont_frac(terms)
    bwd = eval_cont_frac(terms[::-1])
    if fwd.p != bwd.p or (fwd.q * bwd.q) % fwd.p != 1 % fwd.p:
        raise InternalConsistencyError(f"chain reversal law broken: {fwd} vs {bwd}")
    return fwd, bwd


def graph_to_lens(graph: PlumbingGraph) -> LensParams:
    return graph_to_lens_both(graph)[0]


def lens_reverse_orientation(params: LensParams) -> LensParams:
    return LensParams(params.p, params.p - params.q)


def _modular_same_oriented(a: LensParams, b: LensParams) -> bool:
    return a.p == b.p and (a.q == b.q or (a.q * b.q) % a.p == 1 % a.p)


def lens_oriented_homeo(a: LensParams, b: LensParams) -> bool:
    """Same minimal chain up to reversal.

    The classical q' = q^(+-1) mod p criterion is evaluated alongside and
    must agree.
    """
    same = canonical_form(lens_graph(a)) == canonical_form(lens_graph(b))
    if same != _modular_same_oriented(a, b):
        raise InternalConsistencyError(f"graph test and modular test disagree for {a}, {b}")
    return same


def lens_unoriented_homeo(a: LensParams, b: LensParams) -> bool:
    return lens_oriented_homeo(a, b) or lens_oriented_homeo(a, lens_reverse_orientation(b))
