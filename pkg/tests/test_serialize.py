"""JSON and DOT round trips."""

import pytest

from intercol import EdgeColoring, ParameterError, cycle, fibonacci_cube, hypercube, torus
from intercol import oracle
from intercol.bounds import report
from intercol.constructions import cycle_separable
from intercol.serialize import (
    certificate_to_json,
    coloring_from_json,
    coloring_to_json,
    graph_from_json,
    graph_to_json,
    report_to_json,
    spectrum_to_json,
    to_dot,
)
from intercol.coloring import verify_interval


@pytest.mark.parametrize("g", [cycle(5), hypercube(3), torus(3, 4), fibonacci_cube(4)])
def test_graph_round_trip(g):
    assert graph_from_json(graph_to_json(g)) == g


def test_graph_json_shape():
    obj = graph_to_json(torus(3, 3))
    assert isinstance(obj["vertices"][0], list)
    assert obj["edges"][0][0] == [0, 0]


def test_malformed_graph_json():
    with pytest.raises(ParameterError):
        graph_from_json({"vertices": [0, 1]})
    with pytest.raises(ParameterError):
        graph_from_json({"vertices": [0.5], "edges": []})


def test_coloring_round_trip():
    c = cycle_separable(3).coloring
    again = coloring_from_json(coloring_to_json(c))
    assert again == c
    with_graph = coloring_from_json(coloring_to_json(c), c.graph)
    assert with_graph == c


def test_coloring_json_rejects_isolated_vertex_loss():
    from intercol import Graph

    g = Graph([0, 1, 2], [(0, 1)])
    c = EdgeColoring(g, 1, {(0, 1): 1})
    # rebuilding from edge rows alone drops vertex 2
    rebuilt = coloring_from_json(coloring_to_json(c))
    assert rebuilt.graph.num_vertices == 2


def test_certificate_serialization():
    c = EdgeColoring(cycle(4), 2, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2})
    obj = certificate_to_json(verify_interval(c))
    assert obj == {"verdict": "valid_interval", "valid": True}
    bad = EdgeColoring(cycle(4), 2, {(0, 1): 1, (1, 2): 1, (2, 3): 1, (0, 3): 2})
    obj = certificate_to_json(verify_interval(bad))
    assert obj["valid"] is False and "witness" in obj


def test_spectrum_serialization():
    s = oracle.feasible_spectrum(cycle(6))
    obj = spectrum_to_json(s)
    assert [row["t"] for row in obj["feasible"]] == [2, 3, 4]
    assert obj["status"] == "complete"
    assert obj["colorable"] is True


def test_report_serialization():
    obj = report_to_json(report("torus:4,4"))
    assert obj["best_lower_W"] == 10
    assert obj["best_upper_W"] == 12
    directions = {e["direction"] for e in obj["entries"]}
    assert {"lower_W", "upper_W", "exact_w"} <= directions


def test_dot_output():
    g = cycle(3)
    text = to_dot(g)
    assert text.splitlines()[0] == "graph G {"
    assert '  "0" -- "1";' in text
    c = EdgeColoring(torus(3, 3).__class__([0, 1], [(0, 1)]), 1, {(0, 1): 1})
    text = to_dot(c.graph, c)
    assert '  "0" -- "1" [label=1];' in text


def test_dot_tuple_labels_and_isolated_vertices():
    from intercol import Graph

    g = Graph([(0, 0), (0, 1), (1, 1)], [((0, 0), (0, 1))])
    text = to_dot(g)
    assert '  "(0,0)" -- "(0,1)";' in text
    assert '  "(1,1)";' in text


def test_dot_rejects_foreign_coloring():
    c = cycle_separable(2).coloring
    with pytest.raises(ParameterError):
        to_dot(cycle(6), c)
