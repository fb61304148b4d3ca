"""Command-line front end: ``edgeswap {check,enumerate,sample,gog,canon}``.

Results go to stdout (JSON or JSON-lines unless noted), diagnostics to
stderr. Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence, TextIO

from .canonical import canonical_form, isomorphism_classes
from .connectivity import space_connectivity
from .enumeration import EnumFilter, census, count_graphs, enumerate_graphs, triangle_histogram
from .errors import EdgeSwapError, FilterInapplicable
from .gog import DEFAULT_CENSUS_CAP, GogSpec, build_gog, components_intersect_classes
from .graph import (
    SIMPLE,
    SPACE_NAMES,
    Graph,
    GraphSpace,
    format_graph,
    parse_graph,
    parse_int_list,
    validate_degree_sequence,
)
from .mcmc import ChainConfig, iter_samples


def _space(name: str) -> GraphSpace:
    try:
        return GraphSpace.from_name(name)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> tuple[int, ...]:
    if os.path.isfile(text):
        with open(text) as fh:
            text = fh.read()
    try:
        return parse_int_list(text)
    except EdgeSwapError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(obj) + "\n")


def _edges_json(g: Graph) -> list[list[int]]:
    return [[u, v] for u, v in g.edges]


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path) as fh:
        return parse_graph(fh.read())


def _filter(args) -> EnumFilter | None:
    count = getattr(args, "triangles", None)
    seq = getattr(args, "triangle_seq", None)
    if count is None and seq is None:
        return None
    return EnumFilter(triangle_count=count, triangle_seq=seq)


# --- subcommands -------------------------------------------------------


def cmd_check(args, out: TextIO) -> int:
    verdict = space_connectivity(args.space, args.degseq)
    out.write(f"{verdict}\n")
    return 0


def cmd_enumerate(args, out: TextIO) -> int:
    filt = _filter(args)
    if args.count_only:
        out.write(f"{count_graphs(args.space, args.degseq, filt, jobs=args.jobs)}\n")
        return 0
    if args.histogram or args.classes:
        summary: dict = {}
        if args.histogram:
            if args.space != SIMPLE:
                raise FilterInapplicable("triangle histograms need --space simple")
            hist = triangle_histogram(args.degseq, filt, jobs=args.jobs)
            summary["total"] = sum(hist.values())
            summary["histogram"] = {str(k): v for k, v in hist.items()}
        if args.classes:
            graphs = census(args.space, args.degseq, filt, limit=args.limit)
            summary["total"] = len(graphs)
            summary["class_sizes"] = isomorphism_classes(graphs).sizes
        _dump(summary, out)
        return 0
    for g in enumerate_graphs(args.space, args.degseq, filt, limit=args.limit):
        _dump({"edges": _edges_json(g)}, out)
    return 0


def cmd_sample(args, out: TextIO) -> int:
    if args.input is not None:
        g0 = _read_graph(args.input)
    else:
        g0 = next(enumerate_graphs(args.space, args.degseq), None)
        if g0 is None:
            raise EdgeSwapError(f"no {args.space.name} graph has degree sequence {args.degseq}")
    cfg = ChainConfig(args.space, burn_in=args.burn_in, thin=args.thin,
                      sample_count=args.count, seed=args.seed)
    for steps, g in iter_samples(g0, cfg):
        _dump({"edges": _edges_json(g), "step": steps}, out)
    return 0


def cmd_gog(args, out: TextIO) -> int:
    filt = _filter(args)
    spec = GogSpec(args.space, args.degseq, swap_arity=args.k, keep=filt, cap=args.cap,
                   all_orders=args.all_orders)
    report = build_gog(spec)
    matrix = None
    if args.classes:
        classes = isomorphism_classes(report.graphs)
        matrix = components_intersect_classes(report, classes)
    _dump(report.to_dict(matrix), out)
    return 0


def cmd_canon(args, out: TextIO) -> int:
    g = _read_graph(args.input)
    canon, labels = canonical_form(g)
    if args.json:
        _dump({"n": canon.n, "edges": _edges_json(canon), "relabeling": labels}, out)
    else:
        out.write(format_graph(canon))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgeswap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    space_help = f"graph space: {', '.join(SPACE_NAMES)}"

    def add_space(p):
        p.add_argument("--space", type=_space, required=True, help=space_help)

    def add_degseq(p, required=True):
        p.add_argument("--degseq", type=_int_list, required=required,
                       help="comma-separated degrees, or a file containing them")

    def add_triangles(p, count_flag="--triangles", seq_flag="--triangle-seq"):
        p.add_argument(count_flag, dest="triangles", type=int, help="fix the total triangle count")
        p.add_argument(seq_flag, dest="triangle_seq", type=_int_list, help="fix the per-vertex triangle counts")

    p = sub.add_parser("check", help="connectivity verdict for a space and degree sequence")
    add_space(p)
    add_degseq(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="list or count every graph with the given degrees")
    add_space(p)
    add_degseq(p)
    add_triangles(p)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--histogram", choices=["triangles"])
    p.add_argument("--classes", action="store_true", help="report isomorphism class sizes")
    p.add_argument("--limit", type=int, default=None, help="fail if the census exceeds this size")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for counting")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sample", help="stream JSON-lines samples from the swap chain")
    add_space(p)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="starting graph in text format ('-' for stdin)")
    src.add_argument("--degseq", type=_int_list, help="start from the first enumerated graph")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--burn-in", type=int, default=None, help="default 20*m*ln(m)+1000")
    p.add_argument("--thin", type=int, default=None, help="default m")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("gog", help="connected components of the graph of graphs")
    add_space(p)
    add_degseq(p)
    p.add_argument("--k", type=int, default=2, help="swap arity")
    add_triangles(p, "--fix-triangles", "--fix-triangle-seq")
    p.add_argument("--classes", action="store_true", help="add the component x isomorphism-class matrix")
    p.add_argument("--all-orders", action="store_true",
                   help="allow k-swaps that rotate endpoints in any cyclic order")
    p.add_argument("--cap", type=int, default=DEFAULT_CENSUS_CAP)
    p.set_defaults(func=cmd_gog)

    p = sub.add_parser("canon", help="canonical form of a graph")
    p.add_argument("--input", default="-", help="graph in text format ('-' for stdin)")
    p.add_argument("--json", action="store_true", help="emit JSON with the vertex relabeling")
    p.set_defaults(func=cmd_canon)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    try:
        if getattr(args, "degseq", None) is not None:
            args.degseq = validate_degree_sequence(args.degseq)
        return args.func(args, out)
    except (EdgeSwapError, OSError) as exc:
        print(f"edgeswap: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
