"""Cusp cycles, torus-bundle monodromy and the cusp duality.

Monodromy convention: the word ``(b1, ..., bk)`` maps to the ordered product
``M(b1) @ ... @ M(bk)`` with ``M(b) = [[b, -1], [1, 0]]``.  Only trace,
determinant and conjugacy class are meaningful; all tests use those.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import AllTwos, InternalConsistencyError, InvalidCuspWord, UnrepresentableCusp
from .graph import CYCLE, PlumbingGraph, dihedral_min, intersection_matrix, is_negative_definite, shape_classify


@dataclass(frozen=True)
class CuspWord:
    """Cyclic word of a cusp graph, stored as given (not canonicalised)."""

    terms: tuple[int, ...]

    def __post_init__(self):
        t = tuple(self.terms)
        object.__setattr__(self, "terms", t)
        if len(t) < 2:
            raise InvalidCuspWord(f"cusp words need length >= 2 (a 1-cycle is a loop), got {t}")
        if any(b < 2 for b in t):
            raise InvalidCuspWord(f"all entries must be >= 2, got {t}")
        if all(b == 2 for b in t):
            raise AllTwos(f"a cusp word needs an entry >= 3, got {t}")

    def canonical(self) -> "CuspWord":
        return CuspWord(dihedral_min(self.terms))

    def __len__(self):
        return len(self.terms)


@dataclass(frozen=True)
class MonodromyMatrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise InternalConsistencyError(f"determinant of {self} is not 1")

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __matmul__(self, other: "MonodromyMatrix") -> "MonodromyMatrix":
        return MonodromyMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]


def _terms(word: CuspWord | Sequence[int]) -> tuple[int, ...]:
    return word.terms if isinstance(word, CuspWord) else tuple(word)


def is_cusp_graph(graph: PlumbingGraph) -> bool:
    """Genus-0 cycle, all Euler numbers <= -2, at least one <= -3.

    The combinatorial answer is checked against negative definiteness of
    the intersection matrix; for cycles the two must coincide.
    """
    if shape_classify(graph).kind != CYCLE:
        return False
    combinatorial = all(v.genus == 0 and v.euler <= -2 for v in graph.vertices) and any(
        v.euler <= -3 for v in graph.vertices
    )
    if all(v.genus == 0 and v.euler <= -2 for v in graph.vertices):
        definite = is_negative_definite(intersection_matrix(graph))
        if definite != combinatorial:
            raise InternalConsistencyError(f"cusp test and definiteness disagree on {graph}")
    return combinatorial


def cusp_word(graph: PlumbingGraph) -> CuspWord:
    """Word read off a cusp graph in its canonical cyclic order."""
    if not is_cusp_graph(graph):
        raise InvalidCuspWord("graph is not a cusp cycle")
    return CuspWord(tuple(-graph.euler(i) for i in shape_classify(graph).order))


def cusp_graph(word: CuspWord | Sequence[int]) -> PlumbingGraph:
    w = word if isinstance(word, CuspWord) else CuspWord(tuple(word))
    return PlumbingGraph.cycle([-b for b in w.terms])


def monodromy(word: CuspWord | Sequence[int]) -> MonodromyMatrix:
    """Ordered product of the factors ``[[b, -1], [1, 0]]``.

    Plain sequences are accepted so that degenerate words (length one,
    all twos) can be examined too.
    """
    result = MonodromyMatrix(1, 0, 0, 1)
    for b in _terms(word):
        result = result @ MonodromyMatrix(b, -1, 1, 0)
    return result


def trace_condition(word: CuspWord | Sequence[int]) -> bool:
    return monodromy(word).trace >= 3


def dual_terms(word: CuspWord | Sequence[int]) -> tuple[int, ...]:
    """Swap entries and runs of twos around the cyclic word.

    An entry ``m + 3`` becomes a run of ``m`` twos and a maximal run of
    ``r`` twos (possibly empty, between two consecutive entries >= 3)
    becomes the entry ``r + 3``.  Cyclic order is kept; the result is not
    canonicalised and may have length one.
    """
    t = _terms(word)
    big = [i for i, b in enumerate(t) if b >= 3]
    if not big:
        raise AllTwos(f"word {t} has no entry >= 3")
    start = big[0]
    t = t[start:] + t[:start]
    out: list[int] = []
    i = 0
    n = len(t)
    while i < n:
        out.extend([2] * (t[i] - 3))
        i += 1
        run = 0
        while i < n and t[i] == 2:
            run += 1
            i += 1
        out.append(run + 3)
    return tuple(out)


def cusp_reverse_orientation(word: CuspWord | Sequence[int]) -> CuspWord:
    """Cusp word of the orientation-reversed link, canonical up to rotation/reflection."""
    dual = dual_terms(word)
    if len(dual) < 2:
        raise UnrepresentableCusp(
            f"the dual of {_terms(word)} is the one-vertex cycle {dual}, which needs a loop edge"
        )
    return CuspWord(dihedral_min(dual))


def cusp_oriented_homeo(a: CuspWord | Sequence[int], b: CuspWord | Sequence[int]) -> bool:
    return dihedral_min(_terms(a)) == dihedral_min(_terms(b))
