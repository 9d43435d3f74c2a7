import random
from collections import defaultdict
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plumbcalc.bnp import (
    BILIP_DISTINCT,
    BILIP_EQUIVALENT,
    NOT_HOMEO,
    ORIENTED,
    UNORIENTED_ONLY,
    BnpDescriptor,
    LNodeRecord,
    StringRecord,
    bnp_descriptor,
    bnp_equal,
    bnp_match,
    compare,
    inner_rates,
    l_nodes,
    rate_multiset,
    string_decomposition,
)
from plumbcalc.cusp import CuspWord, cusp_graph
from plumbcalc.errors import NotTautClass, Unsupported
from plumbcalc.graph import CHAIN, CYCLE, PlumbingGraph, Vertex, canonical_form, relabel
from plumbcalc.lens import LensParams, lens_graph
from plumbcalc.survey import cusp_words

from oracles import dihedral_orbit

LENS_27_8 = PlumbingGraph.chain([-4, -2, -3, -2])
LENS_27_19 = PlumbingGraph.chain([-2, -2, -4, -3])
CUSP_A = PlumbingGraph.cycle([-4, -2, -5, -2, -2, -3])
CUSP_B = PlumbingGraph.cycle([-3, -2, -4, -2, -2, -5])


def curvettes(d):
    return [rec.curvettes for rec in d.lnodes]


# -- L-nodes and strings ------------------------------------------------------------


def test_l_nodes_lens_27_pair():
    assert sorted(l_nodes(LENS_27_8)) == [0, 2, 3]
    assert sorted(l_nodes(LENS_27_19)) == [0, 2, 3]


def test_l_nodes_cusp_pair():
    assert sorted(CUSP_A.euler(i) for i in l_nodes(CUSP_A)) == [-5, -4, -3]


def test_l_nodes_reject_non_taut():
    with pytest.raises(NotTautClass):
        l_nodes(PlumbingGraph.chain([-3, -1, -3]))


def test_strings_lens_27_8():
    assert [s.n for s in string_decomposition(LENS_27_8)] == [1, 0]
    assert inner_rates(LENS_27_8) == [Fraction(2), Fraction(3, 2)]


def test_strings_lens_27_19():
    # canonical orientation reads (-3, -4, -2, -2), the reverse of the input order
    assert [s.n for s in string_decomposition(LENS_27_19)] == [0, 1]
    assert inner_rates(LENS_27_19) == [Fraction(3, 2), Fraction(2)]
    assert sorted(inner_rates(LENS_27_19)) == sorted(inner_rates(LENS_27_8))


def test_strings_cusp_pair_cyclic():
    ns = tuple(s.n for s in string_decomposition(CUSP_A))
    assert (1, 2, 0) in dihedral_orbit(ns)


def test_adjacent_l_nodes_rate():
    assert inner_rates(PlumbingGraph.chain([-3, -3])) == [Fraction(3, 2)]


def test_string_record():
    assert StringRecord(0).inner_rate == Fraction(3, 2)
    assert StringRecord(4).inner_rate == Fraction(7, 2)


# -- descriptors ------------------------------------------------------------------


def test_descriptor_lens_27_8():
    d = bnp_descriptor(LENS_27_8)
    assert str(d) == "L(3) S(2) L(1) S(3/2) L(1)"
    assert d.shape == CHAIN and curvettes(d) == [3, 1, 1]


def test_descriptor_lens_27_19():
    d = bnp_descriptor(LENS_27_19)
    # printed in canonical orientation; reversed it reads L(1) S(2) L(2) S(3/2) L(2)
    assert str(d) == "L(2) S(3/2) L(2) S(2) L(1)"
    assert curvettes(d)[::-1] == [1, 2, 2]


def test_descriptor_cusp_pair_left():
    d = bnp_descriptor(CUSP_A)
    assert d.shape == CYCLE
    expected = BnpDescriptor(
        CYCLE,
        tuple(LNodeRecord(0, 0, 2, c) for c in (2, 3, 1)),
        tuple(StringRecord(n) for n in (1, 2, 0)),
    )
    assert bnp_equal(d, expected)
    assert str(d) == "cyclic L(1) S(3/2) L(2) S(2) L(3) S(5/2)"


def test_single_vertex_chain():
    d = bnp_descriptor(PlumbingGraph.chain([-7]))
    assert d.lnodes == (LNodeRecord(0, -7, 0, 7),) and d.strings == ()
    assert bnp_equal(d, bnp_descriptor(PlumbingGraph.chain([-7])))
    assert not bnp_equal(d, bnp_descriptor(PlumbingGraph.chain([-5])))


def test_record_equality_ignores_vertex_ids():
    assert LNodeRecord(0, -4, 1, 3) == LNodeRecord(9, -5, 1, 3)


def test_partition_property():
    graphs = [lens_graph(LensParams(p, q)) for p in range(2, 60) for q in range(1, p) if gcd(p, q) == 1]
    graphs += [cusp_graph(w) for w in cusp_words(6, 4)]
    for g in graphs:
        d = bnp_descriptor(g)
        assert len(d.lnodes) + sum(s.n for s in d.strings) == len(g.vertices)
        if d.shape == CHAIN:
            assert len(d.lnodes) == len(d.strings) + 1
        else:
            assert len(d.lnodes) == len(d.strings) >= 1
        for rec in d.lnodes:
            assert rec.curvettes == -rec.euler - rec.valency
            assert rec.valency in (0, 1, 2)


def test_l_node_characterisations_agree_on_taut_family():
    for p in range(2, 201):
        for q in range(1, p):
            if gcd(p, q) == 1:
                g = lens_graph(LensParams(p, q))
                ends = {0, len(g.vertices) - 1}
                assert set(l_nodes(g)) == {v.id for v in g.vertices if v.euler <= -3} | ends
    for w in cusp_words(8, 5):
        g = cusp_graph(w)
        assert set(l_nodes(g)) == {v.id for v in g.vertices if v.euler <= -3}


# -- equality ---------------------------------------------------------------------


def test_lens_27_pair_descriptors_differ():
    a, b = bnp_descriptor(LENS_27_8), bnp_descriptor(LENS_27_19)
    assert not bnp_equal(a, b)
    # rates alone do not separate them
    assert rate_multiset(a) == rate_multiset(b) == (Fraction(3, 2), Fraction(2))


def test_descriptor_equals_its_reversal():
    d = bnp_descriptor(LENS_27_8)
    rev = BnpDescriptor(CHAIN, d.lnodes[::-1], d.strings[::-1])
    assert bnp_match(d, rev) == "reversal"


def test_cusp_pair_descriptors_differ():
    a, b = bnp_descriptor(CUSP_A), bnp_descriptor(CUSP_B)
    assert not bnp_equal(a, b)
    assert rate_multiset(a) == rate_multiset(b)
    # oracle: no dihedral image of one cyclic token sequence equals the other
    assert not any(img == a.tokens() for img in dihedral_orbit(b.tokens()))


def test_different_shapes_never_equal():
    a = bnp_descriptor(PlumbingGraph.chain([-3, -3]))
    b = bnp_descriptor(PlumbingGraph.cycle([-3, -3]))
    assert not bnp_equal(a, b)


def _pool():
    rnd = random.Random(7)
    pool = [lens_graph(LensParams(p, q)) for p in range(2, 30) for q in range(1, p) if gcd(p, q) == 1]
    words = cusp_words(5, 4)
    pool += [cusp_graph(w) for w in words]
    # randomly relabelled copies so that equal descriptors occur often
    extra = []
    for g in rnd.sample(pool, 80):
        ids = list(g.ids)
        perm = ids[:]
        rnd.shuffle(perm)
        extra.append(relabel(g, dict(zip(ids, perm))))
    return [bnp_descriptor(g) for g in pool + extra]


POOL = _pool()


@settings(max_examples=300)
@given(st.integers(0, len(POOL) - 1), st.integers(0, len(POOL) - 1), st.integers(0, len(POOL) - 1))
def test_bnp_equal_is_an_equivalence(i, j, k):
    a, b, c = POOL[i], POOL[j], POOL[k]
    assert bnp_equal(a, a)
    assert bnp_equal(a, b) == bnp_equal(b, a)
    if bnp_equal(a, b) and bnp_equal(b, c):
        assert bnp_equal(a, c)


def test_transitivity_on_equal_classes():
    classes = defaultdict(list)
    for d in POOL:
        classes[(d.shape, tuple(sorted(d.tokens())))].append(d)
    for members in classes.values():
        for x in members:
            for y in members:
                for z in members:
                    if bnp_equal(x, y) and bnp_equal(y, z):
                        assert bnp_equal(x, z)


def test_equal_graphs_give_equal_descriptors():
    groups = defaultdict(list)
    for p in range(2, 201):
        for q in range(1, p):
            if gcd(p, q) == 1:
                g = lens_graph(LensParams(p, q))
                groups[canonical_form(g)].append(g)
    for members in groups.values():
        first = bnp_descriptor(members[0])
        assert all(bnp_equal(first, bnp_descriptor(m)) for m in members[1:])
    rnd = random.Random(11)
    for w in cusp_words(8, 5):
        d = bnp_descriptor(cusp_graph(w))
        image = rnd.choice(sorted(dihedral_orbit(w)))
        assert bnp_equal(d, bnp_descriptor(cusp_graph(image)))


def test_lens_separation_small():
    for p in range(2, 80):
        for q in range(1, p):
            if gcd(p, q) == 1:
                a = bnp_descriptor(lens_graph(LensParams(p, q)))
                b = bnp_descriptor(lens_graph(LensParams(p, p - q)))
                graphs_equal = canonical_form(lens_graph(LensParams(p, q))) == canonical_form(
                    lens_graph(LensParams(p, p - q))
                )
                assert bnp_equal(a, b) == graphs_equal == ((q * q + 1) % p == 0)


# -- compare ------------------------------------------------------------------------


def test_compare_lens_27_pair():
    v = compare(LENS_27_8, LENS_27_19)
    assert v.labels() == [UNORIENTED_ONLY, BILIP_DISTINCT] and v.witness is None


def test_compare_oriented_lens_pair():
    v = compare(lens_graph(LensParams(7, 3)), lens_graph(LensParams(7, 5)))
    assert v.labels() == [ORIENTED, BILIP_EQUIVALENT]
    # descriptors are stored in canonical orientation, so no symmetry is needed
    assert v.witness == "identity"


def test_compare_cusp_pair():
    v = compare(CUSP_A, CUSP_B)
    assert v.labels() == [UNORIENTED_ONLY, BILIP_DISTINCT]


def test_compare_rotated_cusp_has_witness():
    v = compare(CUSP_A, cusp_graph(CuspWord((3, 4, 2, 5, 2, 2))))
    assert v.topology == ORIENTED and v.bilipschitz == BILIP_EQUIVALENT
    assert v.witness is not None


def test_compare_unrelated():
    v = compare(lens_graph(LensParams(5, 2)), lens_graph(LensParams(7, 3)))
    assert v.labels() == [NOT_HOMEO, BILIP_DISTINCT]
    v = compare(lens_graph(LensParams(5, 2)), CUSP_A)
    assert v.topology == NOT_HOMEO


def test_compare_unsupported():
    e = PlumbingGraph((Vertex(0), Vertex(1), Vertex(2), Vertex(3)), ((0, 1), (0, 2), (0, 3)))
    with pytest.raises(Unsupported):
        compare(e, LENS_27_8)
