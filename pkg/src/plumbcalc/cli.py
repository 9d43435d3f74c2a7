"""``plumbcalc`` command-line interface.

Results go to stdout (JSON unless ``--format`` says otherwise), diagnostics
to stderr.  Exit status: 0 on success, 1 on a domain error or a survey with
counterexamples, 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import redirect_stderr, redirect_stdout
from functools import lru_cache
from pathlib import Path

from . import serialize
from .bnp import bnp_descriptor, compare, inner_rates, l_nodes
from .cusp import (
    cusp_graph,
    cusp_reverse_orientation,
    cusp_word,
    is_cusp_graph,
    monodromy,
    trace_condition,
)
from .cycles import anti_degrees, decorate_with_arrows, fundamental_cycle
from .errors import PlumbingError
from .graph import (
    CHAIN,
    PlumbingGraph,
    intersection_matrix,
    is_negative_definite,
    shape_classify,
    validate,
    walk_order,
)
from .lens import (
    LensParams,
    graph_to_lens_both,
    lens_graph,
    lens_reverse_orientation,
    neg_cont_frac,
)
from .resolution import EdgePoint, FreePoint, blow_down, blow_up, central_vertices, pi_tilde
from .survey import survey_cusp, survey_lens


class UsageError(Exception):
    pass


def load_graph(spec: str) -> PlumbingGraph:
    """A JSON file path, or ``lens:p,q`` / ``cusp:b1,b2,...``."""
    if spec.startswith("lens:"):
        p, q = _ints(spec[5:], "lens:p,q", 2)
        return lens_graph(LensParams(p, q))
    if spec.startswith("cusp:"):
        return cusp_graph(_ints(spec[5:], "cusp:b1,b2,..."))
    path = Path(spec)
    if not path.exists():
        raise UsageError(f"no such file: {spec} (expected a JSON path, lens:p,q or cusp:b1,...)")
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise UsageError(f"{spec}: invalid JSON ({exc})") from exc
    return validate(serialize.graph_from_dict(data))


def _ints(text: str, form: str, count: int | None = None) -> list[int]:
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected {form}, got {text!r}") from None
    if count is not None and len(out) != count:
        raise UsageError(f"expected {form}, got {text!r}")
    return out


def graph_text(graph: PlumbingGraph) -> str:
    shape = shape_classify(graph)
    if shape.kind == "other":
        return "graph: " + " ".join(f"{v.id}:{v.euler}" for v in graph.vertices)
    order = walk_order(graph)
    line = f"{shape.kind}: " + " ".join(str(graph.euler(i)) for i in order)
    if any(v.arrows for v in graph.vertices):
        line += "\narrows: " + " ".join(str(graph.vertex(i).arrows) for i in order)
    return line


def emit_graph(graph: PlumbingGraph, fmt: str) -> str:
    if fmt == "text":
        return graph_text(graph) + "\n"
    if fmt == "dot":
        return serialize.graph_to_dot(graph)
    return serialize.dumps(serialize.graph_to_dict(graph)) + "\n"


# ---------------------------------------------------------------------------
# subcommands: each returns (stdout text, exit code)
# ---------------------------------------------------------------------------


def cmd_lens(args):
    params = LensParams(args.p, args.q)
    if args.verbose:
        print(f"terms: {list(neg_cont_frac(params).terms)}", file=sys.stderr)
    return emit_graph(lens_graph(params), args.format), 0


def cmd_contfrac(args):
    terms = list(neg_cont_frac(LensParams(args.p, args.q)).terms)
    if args.format == "text":
        return " ".join(map(str, terms)) + "\n", 0
    return serialize.dumps({"p": args.p, "q": args.q, "terms": terms}) + "\n", 0


def cmd_reverse(args):
    if args.lens:
        a = LensParams(*args.lens)
        b = lens_reverse_orientation(a)
        if args.format == "text":
            return f"L({a.p},{a.q}) -> L({b.p},{b.q})\n", 0
        if args.format == "dot":
            return serialize.graph_to_dot(lens_graph(b)), 0
        out = {
            "input": {"p": a.p, "q": a.q, "terms": list(neg_cont_frac(a).terms)},
            "reversed": {"p": b.p, "q": b.q, "terms": list(neg_cont_frac(b).terms)},
        }
        return serialize.dumps(out) + "\n", 0
    word = cusp_word(load_graph(args.cusp))
    dual = cusp_reverse_orientation(word)
    if args.verbose:
        print(f"word {list(word.terms)} -> {list(dual.terms)}", file=sys.stderr)
    return emit_graph(cusp_graph(dual), args.format), 0


def _annotated_dot(graph: PlumbingGraph, values: dict[int, int], name: str) -> str:
    lines = serialize.graph_to_dot(graph).splitlines()
    out = []
    for line in lines:
        for v in graph.vertices:
            tag = f'  v{v.id} [label="'
            if line.startswith(tag):
                line = line.replace('"];', f' {name}={values[v.id]}"];')
        out.append(line)
    return "\n".join(out) + "\n"


def cmd_fundamental_cycle(args):
    graph = load_graph(args.graph)
    z = fundamental_cycle(graph)
    if args.format == "dot":
        return _annotated_dot(graph, z, "a"), 0
    if args.format == "text":
        return " ".join(f"{i}:{z[i]}" for i in sorted(z)) + "\n", 0
    out = serialize.divisor_to_dict(z)
    out["anti_degrees"] = {str(i): k for i, k in sorted(anti_degrees(graph, z).items())}
    return serialize.dumps(out) + "\n", 0


def cmd_arrows(args):
    decorated = decorate_with_arrows(load_graph(args.graph))
    if args.format == "json":
        out = {"arrows": {str(v.id): v.arrows for v in decorated.vertices}, "graph": serialize.graph_to_dict(decorated)}
        return serialize.dumps(out) + "\n", 0
    return emit_graph(decorated, args.format), 0


def cmd_blowup(args):
    graph = load_graph(args.graph)
    if args.edge:
        a, b = _ints(args.edge, "--edge a,b", 2)
        site = EdgePoint(a, b)
    else:
        site = FreePoint(args.vertex)
    return emit_graph(blow_up(graph, site), args.format), 0


def cmd_blowdown(args):
    return emit_graph(blow_down(load_graph(args.graph), args.vertex), args.format), 0


def cmd_pitilde(args):
    tilde = pi_tilde(load_graph(args.graph))
    if args.verbose:
        print(f"special P-nodes: {central_vertices(tilde)}", file=sys.stderr)
    if args.format == "json":
        out = {"graph": serialize.graph_to_dict(tilde), "special_p_nodes": central_vertices(tilde)}
        return serialize.dumps(out) + "\n", 0
    return emit_graph(tilde, args.format), 0


def cmd_bnp(args):
    graph = load_graph(args.graph)
    desc = bnp_descriptor(graph)
    if args.format == "text":
        return str(desc) + "\n", 0
    out = serialize.descriptor_to_dict(desc)
    if args.verbose:
        print(f"L-nodes: {l_nodes(graph)}; inner rates: {[str(r) for r in inner_rates(graph)]}", file=sys.stderr)
    return serialize.dumps(out) + "\n", 0


def cmd_compare(args):
    g1, g2 = load_graph(args.g1), load_graph(args.g2)
    verdict = compare(g1, g2)
    if args.verbose:
        for label, g in (("first", g1), ("second", g2)):
            print(f"{label}: {bnp_descriptor(g)}", file=sys.stderr)
            if shape_classify(g).kind == CHAIN:
                fwd, bwd = graph_to_lens_both(g)
                print(f"  readings: L({fwd.p},{fwd.q}) / L({bwd.p},{bwd.q})", file=sys.stderr)
    if args.format == "text":
        return " ".join(verdict.labels()) + "\n", 0
    out = {
        "topology": verdict.topology,
        "bilipschitz": verdict.bilipschitz,
        "verdict": verdict.labels(),
        "witness": verdict.witness,
    }
    return serialize.dumps(out) + "\n", 0


def cmd_cusp_check(args):
    graph = load_graph(args.graph)
    cusp = is_cusp_graph(graph)
    out = {"cusp": cusp, "negative_definite": is_negative_definite(intersection_matrix(graph))}
    if cusp:
        out["word"] = list(cusp_word(graph).terms)
    if args.format == "text":
        return ("cusp" if cusp else "not a cusp") + "\n", 0
    return serialize.dumps(out) + "\n", 0


def cmd_monodromy(args):
    word = cusp_word(load_graph(args.graph))
    m = monodromy(word)
    if args.format == "text":
        return f"[[{m.a}, {m.b}], [{m.c}, {m.d}]] trace {m.trace}\n", 0
    out = {"word": list(word.terms), "matrix": m.rows(), "trace": m.trace, "trace_condition": trace_condition(word)}
    return serialize.dumps(out) + "\n", 0


def _survey_output(report, fmt):
    if fmt == "text":
        d = report.to_dict()
        lines = [f"{k}: {v}" for k, v in d["counts"].items()]
        lines.append(f"counterexamples: {len(report.counterexamples)}")
        return "\n".join(lines) + "\n", report.exit_code
    return serialize.dumps(report.to_dict()) + "\n", report.exit_code


def cmd_survey_lens(args):
    return _survey_output(survey_lens(args.pmax), args.format)


def cmd_survey_cusp(args):
    return _survey_output(survey_cusp(args.kmax, args.bmax), args.format)


@lru_cache(maxsize=1)
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plumbcalc", description="Plumbing graphs of Hirzebruch-Jung and cusp singularities.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "dot", "text"], default="json")
    common.add_argument("--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("lens", cmd_lens, "minimal plumbing graph of L(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p = add("contfrac", cmd_contfrac, "negative continued fraction of p/q")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p = add("reverse", cmd_reverse, "orientation reversal of a lens space or cusp")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--lens", nargs=2, type=int, metavar=("P", "Q"))
    g.add_argument("--cusp", metavar="GRAPH")
    for name, func, help_ in (
        ("fundamental-cycle", cmd_fundamental_cycle, "fundamental cycle by Laufer's algorithm"),
        ("arrows", cmd_arrows, "decorate a taut graph with curvette arrows"),
        ("pitilde", cmd_pitilde, "blow up the middle of every even string"),
        ("bnp", cmd_bnp, "thick-thin descriptor"),
        ("cusp-check", cmd_cusp_check, "is the graph a cusp cycle?"),
        ("monodromy", cmd_monodromy, "torus bundle monodromy of a cusp"),
    ):
        add(name, func, help_).add_argument("graph")
    p = add("blowup", cmd_blowup, "blow up a point of the exceptional divisor")
    p.add_argument("graph")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--edge", metavar="A,B")
    g.add_argument("--vertex", type=int)
    p = add("blowdown", cmd_blowdown, "blow down a (-1)-vertex")
    p.add_argument("graph")
    p.add_argument("--vertex", type=int, required=True)
    p = add("compare", cmd_compare, "compare two taut graphs")
    p.add_argument("g1")
    p.add_argument("g2")
    p = add("survey-lens", cmd_survey_lens, "check L(p,q) against L(p,p-q) for p <= pmax")
    p.add_argument("--pmax", type=int, default=200)
    p = add("survey-cusp", cmd_survey_cusp, "check every cusp word against its dual")
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--bmax", type=int, default=5)
    return parser


def run_command(argv: list[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with redirect_stdout(stdout), redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = args.func(args)
    except UsageError as exc:
        parser.print_usage(stderr)
        print(f"plumbcalc: error: {exc}", file=stderr)
        return 2
    except (PlumbingError, ValueError) as exc:
        print(f"plumbcalc: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    stdout.write(text)
    return code


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
