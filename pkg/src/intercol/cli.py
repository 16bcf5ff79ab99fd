"""Command-line front end.

Subcommands: gen, product, color, verify, bounds, search, export.  All output
is machine-readable JSON unless --table asks for a rendered table.  Graph
arguments are file paths when such a file exists, family descriptors
(``cycle:8xk:2``) otherwise.  Exit codes: 0 success/valid, 1 invalid coloring
or not colorable, 2 usage/contract errors, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import bounds as bounds_mod
from . import constructions, families, oracle, serialize
from .coloring import EdgeColoring, is_separable, verify_interval
from .errors import IntercolError, NotColorable, ParameterError, Undecided
from .graphs import Graph
from .serialize import (
    coloring_from_json,
    coloring_to_json,
    graph_from_json,
    graph_to_json,
    label_from_json,
    report_to_json,
    spectrum_to_json,
    to_dot,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _default_budget() -> int:
    env = os.environ.get("INTERCOL_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ParameterError(f"INTERCOL_BUDGET must be an integer, got {env!r}") from None
    return oracle.DEFAULT_BUDGET


def _load_graph(arg: str) -> Graph:
    """File path when one exists, family descriptor otherwise."""
    p = Path(arg)
    if p.exists():
        with p.open() as fh:
            return graph_from_json(json.load(fh))
    return families.generate(arg)


def _load_coloring(arg: str, graph: Graph | None = None) -> EdgeColoring:
    p = Path(arg)
    if not p.exists():
        raise ParameterError(f"coloring file {arg!r} does not exist")
    with p.open() as fh:
        return coloring_from_json(json.load(fh), graph)


def _emit(payload, args) -> None:
    text = json.dumps(payload, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)


def _emit_text(text: str, args) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _render_table(rows: list[tuple], header: tuple) -> str:
    table = [tuple(str(c) for c in header)] + [tuple(str(c) for c in row) for row in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = []
    for r, row in enumerate(table):
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
        if r == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


# -- subcommands -----------------------------------------------------------------


def _cmd_gen(args) -> int:
    descriptor = args.family
    if args.params:
        descriptor += ":" + ",".join(str(p) for p in args.params)
    g = families.generate(descriptor)
    _emit(graph_to_json(g), args)
    return EXIT_OK


def _cmd_product(args) -> int:
    factors = [_load_graph(a) for a in args.graphs]
    from .graphs import product_all

    _emit(graph_to_json(product_all(factors)), args)
    return EXIT_OK


def _separable_from_descriptor(text: str) -> constructions.SeparableColoring:
    spec = families.parse_descriptor(text)
    if not isinstance(spec, families.FamilySpec):
        raise ParameterError("separable construction takes a single family term")
    if spec.kind == "cycle":
        return constructions.cycle_separable(*spec.params)
    if spec.kind == "caterpillar":
        return constructions.caterpillar_separable(*spec.params)
    if spec.kind == "complete_bipartite":
        return constructions.complete_bipartite_separable(*spec.params)
    if spec.kind == "hypercube":
        return constructions.hypercube_max_separable(*spec.params)
    raise ParameterError(f"no separable construction for family {spec.kind!r}")


def _oracle_max_coloring(text: str, budget: int) -> EdgeColoring:
    return oracle.max_coloring(_load_graph(text), budget=budget)


def _cmd_color(args) -> int:
    budget = args.budget if args.budget is not None else _default_budget()
    method = args.method
    params = args.params
    if method == "cycle":
        result = constructions.cycle_separable(int(params[0])).coloring
    elif method == "caterpillar":
        result = constructions.caterpillar_separable(*(int(p) for p in params)).coloring
    elif method == "kmn":
        result = constructions.complete_bipartite_separable(int(params[0]), int(params[1])).coloring
    elif method == "hypercube-max":
        result = constructions.hypercube_max_separable(int(params[0])).coloring
    elif method == "fib-min":
        result = constructions.fibonacci_min_coloring(int(params[0]))
    elif method == "fib-plus":
        result = constructions.fibonacci_plus_coloring(int(params[0]))
    elif method == "product-max":
        alpha = _oracle_max_coloring(params[0], budget)
        beta = _oracle_max_coloring(params[1], budget)
        result = constructions.product_max_coloring(alpha, beta)
    elif method == "separable-product":
        sc = _separable_from_descriptor(params[0])
        beta = _oracle_max_coloring(params[1], budget)
        result = constructions.separable_product_coloring(sc, beta)
    else:
        raise ParameterError(f"unknown coloring method {method!r}")
    if args.graph_out:
        Path(args.graph_out).write_text(json.dumps(graph_to_json(result.graph), indent=2) + "\n")
    _emit(coloring_to_json(result), args)
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    c = _load_coloring(args.coloring, g)
    cert = verify_interval(c)
    payload = serialize.certificate_to_json(cert)
    if cert.is_valid and args.separable is not None:
        root = _parse_label(args.separable)
        sep = is_separable(c, root)
        payload["separable"] = bool(sep)
        if not sep:
            payload["separable_failure"] = serialize.label_to_json(sep.failing_vertex)
    _emit(payload, args)
    ok = cert.is_valid and (args.separable is None or payload.get("separable", False))
    return EXIT_OK if ok else EXIT_INVALID


def _parse_label(text: str):
    try:
        return label_from_json(json.loads(text))
    except (json.JSONDecodeError, ParameterError):
        return text


def _cmd_bounds(args) -> int:
    if len(args.family) == 1 and not args.family[0].isdigit():
        descriptor = args.family[0]
    else:
        descriptor = f"{args.family[0]}:{','.join(args.family[1:])}" if len(args.family) > 1 else args.family[0]
    rep = bounds_mod.report(descriptor)
    if args.table:
        rows = [(e.name, e.direction, "-" if e.value is None else e.value, e.citation) for e in rep.entries]
        _emit_text(_render_table(rows, ("bound", "direction", "value", "citation")), args)
    else:
        _emit(report_to_json(rep), args)
    return EXIT_INVALID if rep.not_colorable else EXIT_OK


def _cmd_search(args) -> int:
    g = _load_graph(args.graph)
    budget = args.budget if args.budget is not None else _default_budget()
    if args.t is not None:
        res = oracle.search(g, args.t, budget=budget)
        payload = {
            "t": args.t,
            "status": res.status,
            "nodes": res.nodes,
            "witness": coloring_to_json(res.witness) if res.witness else None,
        }
        _emit(payload, args)
        if res.status == oracle.BUDGET_EXCEEDED:
            return EXIT_BUDGET
        return EXIT_OK if res else EXIT_INVALID
    spectrum = oracle.feasible_spectrum(g, budget=budget, workers=args.threads)
    _emit(spectrum_to_json(spectrum), args)
    if not spectrum.complete:
        return EXIT_BUDGET
    return EXIT_OK if spectrum.witnesses else EXIT_INVALID


def _cmd_export(args) -> int:
    g = _load_graph(args.graph)
    coloring = None
    if args.coloring:
        coloring = _load_coloring(args.coloring, g)
    if args.dot:
        _emit_text(to_dot(g, coloring), args)
    else:
        payload = graph_to_json(g)
        if coloring is not None:
            payload["coloring"] = coloring_to_json(coloring)
        _emit(payload, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intercol",
        description="Interval edge-colorings: generation, constructions, verification, bounds, exact search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph family member as JSON")
    p.add_argument("family")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("product", help="cartesian product of graphs (files or descriptors)")
    p.add_argument("graphs", nargs="+")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_product)

    p = sub.add_parser("color", help="run a coloring construction")
    p.add_argument(
        "--method",
        required=True,
        choices=[
            "product-max",
            "separable-product",
            "cycle",
            "caterpillar",
            "kmn",
            "hypercube-max",
            "fib-min",
            "fib-plus",
        ],
    )
    p.add_argument("params", nargs="+")
    p.add_argument("--out")
    p.add_argument("--graph-out")
    p.add_argument("--budget", type=int)
    p.set_defaults(fn=_cmd_color)

    p = sub.add_parser("verify", help="verify a coloring against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--separable", metavar="ROOT")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("bounds", help="bound report for a family or descriptor")
    p.add_argument("family", nargs="+")
    p.add_argument("--table", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("search", help="exact interval coloring search")
    p.add_argument("graph")
    p.add_argument("--t", type=int)
    p.add_argument("--spectrum", action="store_true")
    p.add_argument("--budget", type=int)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("export", help="re-emit a graph (and coloring) as JSON or DOT")
    p.add_argument("graph")
    p.add_argument("coloring", nargs="?")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except Undecided as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NotColorable as exc:
        print(f"not colorable: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (IntercolError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
