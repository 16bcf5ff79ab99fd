"""Command-line interface: subcommands, file I/O, exit codes."""

import json

import pytest

from intercol.cli import main
from intercol.serialize import graph_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_fibonacci(capsys):
    code, out, _ = run(capsys, "gen", "fibonacci", "4")
    assert code == 0
    obj = json.loads(out)
    assert len(obj["vertices"]) == 8 and len(obj["edges"]) == 10


def test_gen_round_trip_through_export(tmp_path, capsys):
    graph_file = tmp_path / "g.json"
    code, _, _ = run(capsys, "gen", "torus", "4", "4", "--out", str(graph_file))
    assert code == 0
    code, out, _ = run(capsys, "export", str(graph_file))
    assert code == 0
    original = graph_from_json(json.loads(graph_file.read_text()))
    assert graph_from_json(json.loads(out)) == original


def test_gen_caterpillar_and_descriptor_args(capsys):
    code, out, _ = run(capsys, "gen", "caterpillar", "1", "2", "0")
    assert code == 0
    assert len(json.loads(out)["vertices"]) == 5 + 3

    code, out, _ = run(capsys, "product", "cycle:8", "k:2")
    assert code == 0
    assert len(json.loads(out)["vertices"]) == 16


def test_color_fib_min(capsys):
    code, out, _ = run(capsys, "color", "--method", "fib-min", "3")
    assert code == 0
    obj = json.loads(out)
    assert obj["t"] == 3
    colors = {(r[0], r[1]): r[2] for r in obj["edges"]}
    assert colors[("000", "100")] == 1


def test_color_separable_product(capsys):
    code, out, _ = run(capsys, "color", "--method", "separable-product", "cycle:4", "k2")
    assert code == 0
    assert json.loads(out)["t"] == 10


def test_verify_valid_and_tampered(tmp_path, capsys):
    graph_file = tmp_path / "g.json"
    coloring_file = tmp_path / "c.json"
    code, _, _ = run(capsys, "gen", "cycle", "8", "--out", str(graph_file))
    assert code == 0
    code, _, _ = run(
        capsys, "color", "--method", "cycle", "4", "--out", str(coloring_file)
    )
    assert code == 0

    code, out, _ = run(capsys, "verify", str(graph_file), str(coloring_file))
    assert code == 0 and json.loads(out)["valid"] is True

    code, out, _ = run(
        capsys, "verify", str(graph_file), str(coloring_file), "--separable", "0"
    )
    assert code == 0 and json.loads(out)["separable"] is True

    code, out, _ = run(
        capsys, "verify", str(graph_file), str(coloring_file), "--separable", "3"
    )
    assert code == 1

    obj = json.loads(coloring_file.read_text())
    obj["edges"][0][2] = 5
    coloring_file.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "verify", str(graph_file), str(coloring_file))
    assert code == 1
    assert json.loads(out)["valid"] is False


def test_bounds_reports(capsys):
    code, out, _ = run(capsys, "bounds", "torus", "4", "4")
    assert code == 0
    obj = json.loads(out)
    assert obj["best_lower_W"] == 10 and obj["best_upper_W"] == 12

    code, out, _ = run(capsys, "bounds", "hypercube", "4")
    assert code == 0
    obj = json.loads(out)
    assert obj["best_lower_W"] == obj["best_upper_W"] == 10

    code, out, _ = run(capsys, "bounds", "butterflyxk:3")
    assert code == 1
    assert json.loads(out)["not_colorable"] is True

    code, out, _ = run(capsys, "bounds", "torus", "4", "4", "--table")
    assert code == 0
    assert "citation" in out and "lower_W" in out


def test_search_spectrum_and_exit_codes(tmp_path, capsys):
    code, out, _ = run(capsys, "search", "kmn:2,3", "--spectrum")
    assert code == 0
    obj = json.loads(out)
    assert [row["t"] for row in obj["feasible"]] == [4]

    code, out, _ = run(capsys, "search", "cycle:3", "--spectrum")
    assert code == 1

    code, out, _ = run(capsys, "search", "cycle:3", "--t", "2")
    assert code == 1
    assert json.loads(out)["status"] == "exhausted"

    code, out, _ = run(capsys, "search", "hypercube:3", "--t", "6", "--budget", "3")
    assert code == 3
    assert json.loads(out)["status"] == "budget_exceeded"


def test_budget_env_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("INTERCOL_BUDGET", "3")
    code, out, _ = run(capsys, "search", "hypercube:3", "--t", "6")
    assert code == 3
    code, out, _ = run(capsys, "search", "hypercube:3", "--t", "6", "--budget", "100000")
    assert code == 0


def test_export_dot(tmp_path, capsys):
    graph_file = tmp_path / "g.json"
    coloring_file = tmp_path / "c.json"
    run(capsys, "gen", "cycle", "4", "--out", str(graph_file))
    code, _, _ = run(
        capsys,
        "color",
        "--method",
        "cycle",
        "2",
        "--out",
        str(coloring_file),
    )
    assert code == 0
    code, out, _ = run(capsys, "export", str(graph_file), str(coloring_file), "--dot")
    assert code == 0
    lines = [line for line in out.splitlines() if "--" in line]
    assert len(lines) == 4
    assert all("label=" in line for line in lines)


def test_export_missing_coloring_is_usage_error(tmp_path, capsys):
    graph_file = tmp_path / "g.json"
    run(capsys, "gen", "cycle", "4", "--out", str(graph_file))
    code, _, err = run(capsys, "export", str(graph_file), str(tmp_path / "nope.json"), "--dot")
    assert code == 2
    assert "error" in err


def test_unknown_family_is_usage_error(capsys):
    code, _, err = run(capsys, "gen", "dodecahedron")
    assert code == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["search"])  # missing graph argument
    assert exc.value.code == 2
