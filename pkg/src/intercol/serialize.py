"""JSON and DOT serialization.

Graph JSON:    {"vertices": [label, ...], "edges": [[label, label], ...]}
Coloring JSON: {"t": int, "edges": [[label, label, color], ...]}
Labels are integers, strings of 0/1 characters, or (possibly nested) lists.
Tuples round-trip as lists.  DOT export writes one ``--`` line per edge with
a ``label`` attribute carrying the color when a coloring is given.
"""

from __future__ import annotations

from .bounds import BoundReport
from .coloring import ColoringCertificate, EdgeColoring
from .errors import ParameterError
from .graphs import Graph
from .oracle import FeasibleSpectrum


def label_to_json(label):
    if isinstance(label, tuple):
        return [label_to_json(part) for part in label]
    return label


def label_from_json(obj):
    if isinstance(obj, list):
        return tuple(label_from_json(part) for part in obj)
    if isinstance(obj, bool) or not isinstance(obj, (int, str)):
        raise ParameterError(f"invalid label in JSON: {obj!r}")
    return obj


def graph_to_json(g: Graph) -> dict:
    return {
        "vertices": [label_to_json(v) for v in g.vertices],
        "edges": [[label_to_json(u), label_to_json(v)] for u, v in g.edges],
    }


def graph_from_json(obj: dict) -> Graph:
    try:
        vertices = [label_from_json(v) for v in obj["vertices"]]
        edges = [(label_from_json(e[0]), label_from_json(e[1])) for e in obj["edges"]]
    except (KeyError, IndexError, TypeError) as exc:
        raise ParameterError(f"malformed graph JSON: {exc}") from exc
    return Graph(vertices, edges)


def coloring_to_json(c: EdgeColoring) -> dict:
    return {
        "t": c.t,
        "edges": [[label_to_json(u), label_to_json(v), col] for (u, v), col in c.items()],
    }


def coloring_from_json(obj: dict, graph: Graph | None = None) -> EdgeColoring:
    try:
        t = obj["t"]
        rows = [(label_from_json(r[0]), label_from_json(r[1]), r[2]) for r in obj["edges"]]
    except (KeyError, IndexError, TypeError) as exc:
        raise ParameterError(f"malformed coloring JSON: {exc}") from exc
    if graph is None:
        vertices = {u for u, _, _ in rows} | {v for _, v, _ in rows}
        graph = Graph(vertices, [(u, v) for u, v, _ in rows])
    return EdgeColoring(graph, t, {(u, v): col for u, v, col in rows})


def certificate_to_json(cert: ColoringCertificate) -> dict:
    out: dict = {"verdict": cert.verdict, "valid": cert.is_valid}
    if cert.witness is not None:
        out["witness"] = {
            key: label_to_json(value) if key in ("vertex",) else _witness_value(value)
            for key, value in cert.witness.items()
        }
    return out


def _witness_value(value):
    if isinstance(value, tuple):
        return [label_to_json(part) for part in value]
    return value


def spectrum_to_json(spec: FeasibleSpectrum) -> dict:
    lo, hi = spec.checked
    status = "complete" if spec.complete else "budget_exceeded"
    return {
        "graph": graph_to_json(spec.graph),
        "checked": [lo, hi],
        "feasible": [
            {"t": t, "witness": coloring_to_json(spec.witnesses[t])} for t in spec.feasible
        ],
        "statuses": {str(t): s for t, s in sorted(spec.statuses.items())},
        "status": status,
        "colorable": spec.is_colorable,
        "nodes": spec.nodes,
    }


def report_to_json(rep: BoundReport) -> dict:
    return {
        "subject": rep.subject,
        "entries": [
            {"name": e.name, "direction": e.direction, "value": e.value, "citation": e.citation}
            for e in rep.entries
        ],
        "best_lower_W": rep.best_lower(),
        "best_upper_W": rep.best_upper(),
        "not_colorable": rep.not_colorable,
    }


def _dot_name(label) -> str:
    if isinstance(label, tuple):
        inner = ",".join(_dot_name(part).strip('"') for part in label)
        return f'"({inner})"'
    return f'"{label}"'


def to_dot(g: Graph, coloring: EdgeColoring | None = None, name: str = "G") -> str:
    if coloring is not None and coloring.graph != g:
        raise ParameterError("coloring belongs to a different graph")
    lines = [f"graph {name} {{"]
    seen = set()
    for u, v in g.edges:
        seen.add(u)
        seen.add(v)
        if coloring is not None:
            lines.append(f"  {_dot_name(u)} -- {_dot_name(v)} [label={coloring.color(u, v)}];")
        else:
            lines.append(f"  {_dot_name(u)} -- {_dot_name(v)};")
    for v in g.vertices:
        if v not in seen:
            lines.append(f"  {_dot_name(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
