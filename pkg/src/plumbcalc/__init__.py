"""Plumbing-graph calculus for Hirzebruch-Jung and cusp surface singularities."""
from .bnp import (
    BnpDescriptor,
    LNodeRecord,
    StringRecord,
    Verdict,
    bnp_descriptor,
    bnp_equal,
    compare,
    inner_rates,
    l_nodes,
    string_decomposition,
)
from .cusp import (
    CuspWord,
    MonodromyMatrix,
    cusp_oriented_homeo,
    cusp_reverse_orientation,
    is_cusp_graph,
    monodromy,
    trace_condition,
)
from .cycles import CycleReport, anti_degrees, decorate_with_arrows, fundamental_cycle, maximal_cycle_taut
from .graph import (
    IntersectionMatrix,
    PlumbingGraph,
    Shape,
    Vertex,
    abs_determinant,
    intersection_matrix,
    is_negative_definite,
    shape_classify,
    validate,
)
from .lens import (
    LensParams,
    NegContFrac,
    eval_cont_frac,
    graph_to_lens,
    lens_graph,
    lens_oriented_homeo,
    lens_reverse_orientation,
    lens_unoriented_homeo,
    neg_cont_frac,
)
from .resolution import EdgePoint, FreePoint, blow_down, blow_up, central_vertices, is_minimal, pi_tilde

__version__ = "0.1.0"
