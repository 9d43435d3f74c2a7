import itertools
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from plumbcalc.errors import InvalidParams, NotALensGraph
from plumbcalc.graph import PlumbingGraph, abs_determinant, canonical_form, intersection_matrix
from plumbcalc.lens import (
    LensParams,
    NegContFrac,
    eval_cont_frac,
    graph_to_lens,
    graph_to_lens_both,
    lens_graph,
    lens_oriented_homeo,
    lens_reverse_orientation,
    lens_unoriented_homeo,
    neg_cont_frac,
)

from oracles import cf_value


def coprime_pairs(pmax):
    return [(p, q) for p in range(2, pmax + 1) for q in range(1, p) if gcd(p, q) == 1]


@st.composite
def lens_params(draw, pmax=500):
    p = draw(st.integers(2, pmax))
    q = draw(st.integers(1, p - 1).filter(lambda q: gcd(p, q) == 1))
    return LensParams(p, q)


@pytest.mark.parametrize(
    "p, q, terms",
    [(27, 8, (4, 2, 3, 2)), (27, 19, (2, 2, 4, 3)), (7, 3, (3, 2, 2)), (5, 2, (3, 2)), (5, 3, (2, 3)), (8, 3, (3, 3)), (8, 5, (2, 3, 2))],
)
def test_expansions(p, q, terms):
    assert neg_cont_frac(LensParams(p, q)).terms == terms
    assert cf_value(list(terms)) == Fraction(p, q)


@pytest.mark.parametrize("p", [2, 3, 17, 200])
def test_q_equal_one_gives_single_term(p):
    assert neg_cont_frac(LensParams(p, 1)).terms == (p,)
    assert eval_cont_frac([p]) == LensParams(p, 1)


def test_eval_examples():
    assert eval_cont_frac(NegContFrac((4, 2, 3, 2))) == LensParams(27, 8)
    assert eval_cont_frac([3, 2, 2]) == LensParams(7, 3)
    assert cf_value([3, 2, 2]) == Fraction(7, 3)


@pytest.mark.parametrize("p, q", [(4, 2), (1, 1), (5, 5), (5, 0), (5, 7), (6, -1)])
def test_invalid_params(p, q):
    with pytest.raises(InvalidParams):
        LensParams(p, q)


def test_terms_below_two_rejected():
    with pytest.raises(InvalidParams):
        NegContFrac((3, 1))
    with pytest.raises(InvalidParams):
        NegContFrac(())


def test_round_trip_exhaustive():
    for p, q in coprime_pairs(500):
        cf = neg_cont_frac(LensParams(p, q))
        assert min(cf.terms) >= 2
        assert eval_cont_frac(cf) == LensParams(p, q)


def test_oracle_evaluation_matches_expansion():
    for p, q in coprime_pairs(60):
        value = cf_value(list(neg_cont_frac(LensParams(p, q)).terms))
        assert (value.numerator, value.denominator) == (p, q)


def test_determinant_is_p():
    for p, q in coprime_pairs(200):
        assert abs_determinant(intersection_matrix(lens_graph(LensParams(p, q)))) == p


def test_chain_determinant_matches_lens_numerator():
    for k in range(1, 7):
        for terms in itertools.product(range(2, 7), repeat=k):
            g = PlumbingGraph.chain([-b for b in terms])
            assert abs_determinant(intersection_matrix(g)) == graph_to_lens(g).p


def test_reversal_law():
    for p, q in coprime_pairs(200):
        terms = neg_cont_frac(LensParams(p, q)).terms
        back = eval_cont_frac(terms[::-1])
        assert back.p == p and (q * back.q) % p == 1 % p


@given(lens_params())
def test_reverse_orientation_is_involution(params):
    assert lens_reverse_orientation(lens_reverse_orientation(params)) == params


def test_lens_graphs():
    assert lens_graph(LensParams(27, 8)) == PlumbingGraph.chain([-4, -2, -3, -2])
    assert lens_graph(LensParams(27, 19)) == PlumbingGraph.chain([-2, -2, -4, -3])
    assert lens_graph(LensParams(2, 1)) == PlumbingGraph.chain([-2])


def test_graph_to_lens():
    assert graph_to_lens(PlumbingGraph.chain([-4, -2, -3, -2])) == LensParams(27, 8)
    assert graph_to_lens(PlumbingGraph.chain([-2])) == LensParams(2, 1)


def test_graph_to_lens_reports_both_readings():
    fwd, bwd = graph_to_lens_both(PlumbingGraph.chain([-3, -2, -2]))
    assert fwd == LensParams(7, 3)
    assert bwd == LensParams(7, 5)
    assert (3 * 5) % 7 == 1


def test_graph_to_lens_uses_canonical_orientation():
    # (-3, -4, -2, -2) sorts before (-2, -2, -4, -3); 19 * 10 = 1 mod 27
    assert graph_to_lens(PlumbingGraph.chain([-2, -2, -4, -3])) == LensParams(27, 10)


@pytest.mark.parametrize(
    "graph",
    [
        PlumbingGraph.chain([-3, -1, -3]),
        PlumbingGraph.cycle([-3, -2, -2]),
        PlumbingGraph.chain([-3, -2]).replace(genus={0: 1}),
    ],
)
def test_not_a_lens_graph(graph):
    with pytest.raises(NotALensGraph):
        graph_to_lens(graph)


def test_reverse_examples():
    assert lens_reverse_orientation(LensParams(27, 8)) == LensParams(27, 19)
    assert lens_reverse_orientation(LensParams(2, 1)) == LensParams(2, 1)
    assert lens_reverse_orientation(LensParams(5, 2)) == LensParams(5, 3)
    assert neg_cont_frac(LensParams(5, 2)).terms == (3, 2)
    assert neg_cont_frac(LensParams(5, 3)).terms == (2, 3)


def test_oriented_homeo_examples():
    assert not lens_oriented_homeo(LensParams(27, 8), LensParams(27, 19))
    assert lens_oriented_homeo(LensParams(7, 3), LensParams(7, 5))
    assert lens_oriented_homeo(LensParams(11, 4), LensParams(11, 4))


def test_unoriented_homeo_examples():
    assert lens_unoriented_homeo(LensParams(27, 8), LensParams(27, 19))
    assert not lens_unoriented_homeo(LensParams(5, 2), LensParams(7, 3))
    assert lens_oriented_homeo(LensParams(5, 2), LensParams(5, 3))


def _branches(a, b):
    """The four ways two lens spaces can be identified: q' = +-q^(+-1) mod p."""
    p = a.p
    inv = pow(a.q, -1, p)
    return {
        "same": b.q % p == a.q % p,
        "inverse": b.q % p == inv,
        "negated": b.q % p == (-a.q) % p,
        "negated_inverse": b.q % p == (-inv) % p,
    }


def test_five_two_is_self_reversing():
    a = LensParams(5, 2)
    br = _branches(a, a)
    assert br["same"] and br["negated_inverse"]
    assert lens_oriented_homeo(a, lens_reverse_orientation(a))


def test_homeo_predicates_match_modular_branches():
    for p in range(2, 40):
        qs = [q for q in range(1, p) if gcd(p, q) == 1]
        for q1 in qs:
            for q2 in qs:
                a, b = LensParams(p, q1), LensParams(p, q2)
                br = _branches(a, b)
                assert lens_oriented_homeo(a, b) == (br["same"] or br["inverse"])
                assert lens_unoriented_homeo(a, b) == any(br.values())


def test_self_reversing_iff_q_squared_is_minus_one():
    for p, q in coprime_pairs(200):
        a = LensParams(p, q)
        same = canonical_form(lens_graph(a)) == canonical_form(lens_graph(lens_reverse_orientation(a)))
        assert same == ((q * q + 1) % p == 0)
