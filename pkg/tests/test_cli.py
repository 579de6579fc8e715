import io
import json

import pytest

from vulngraph.cli import run
from vulngraph.graph import is_connected, star_graph
from vulngraph.graph6 import parse_graph6, to_graph6


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def test_compute_example():
    code, out, _ = call("compute", "Ch", "--params", "tenacity")
    assert code == 0
    record = json.loads(out)
    (result,) = record["results"]
    assert result["value"] == "3/2"
    assert result["certificate"]["cut"] == [1]


def test_compute_all_parameters_and_complete_graph():
    code, out, _ = call("compute", "C~")
    results = {r["parameter"]: r for r in json.loads(out)["results"]}
    assert code == 0 and len(results) == 6
    assert results["connectivity"]["value"] == "3" and results["connectivity"]["certificate"] is None
    assert results["tenacity"]["value"] is None
    assert results["tenacity"]["undefined"] == "undefined for complete graphs"


def test_compute_multiple_inputs_json_lines(tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text(">>graph6<<Ch\nDqG\n\n")
    code, out, _ = call("compute", str(path), "--params", "tenacity,toughness")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2
    assert [r["parameter"] for r in json.loads(lines[1])["results"]] == ["tenacity", "toughness"]


def test_compute_edge_list(tmp_path):
    path = tmp_path / "star.txt"
    path.write_text("4 3\n0 1\n0 2\n0 3\n")
    code, out, _ = call("compute", str(path), "--params", "tenacity")
    assert code == 0 and json.loads(out)["results"][0]["value"] == "2/3"


def test_compute_stdin_and_table():
    code, out, _ = call("compute", "-", "--format", "table", stdin="Ch\n")
    assert code == 0
    assert "tenacity" in out and "3/2" in out


def test_construct_examples():
    code, out, _ = call("construct", "min-tenacity", "--n", "4", "--m", "3")
    assert code == 0 and parse_graph6(out.strip()) == star_graph(3)
    for argv, n, m in [
        (("construct", "harary", "--n", "6", "--m", "9"), 6, 9),
        (("construct", "min-connectivity", "--n", "5", "--m", "7"), 5, 7),
        (("construct", "extremal-tree", "--n", "9"), 9, 8),
        (("construct", "extremal-unicyclic", "--n", "8"), 8, 8),
    ]:
        code, out, _ = call(*argv)
        g = parse_graph6(out.strip())
        assert code == 0 and (g.n, g.m) == (n, m) and is_connected(g)


def test_enumerate():
    code, out, _ = call("enumerate", "trees", "--n", "7")
    assert code == 0 and len(out.split()) == 11
    code, out, _ = call("enumerate", "connected", "--n", "4", "--m", "3", "--labeled")
    assert len(out.split()) == 16
    code, out, _ = call("enumerate", "unicyclic", "--n", "6")
    assert {parse_graph6(line).m for line in out.split()} == {6}


def test_verify_tree_claim():
    code, out, _ = call("verify", "theorem2", "--n-max", "8")
    report = json.loads(out)
    assert code == 0 and report["status"] == "verified" and report["claim"] == "theorem2"


def test_verify_counterexample_exit_code(monkeypatch):
    from vulngraph import verification

    monkeypatch.setattr(verification, "is_max_tenacity_tree", lambda g: True)
    code, out, _ = call("verify", "theorem2", "--n-max", "6")
    assert code == 1 and json.loads(out)["status"] == "counterexample"


def test_output_is_deterministic():
    argv = ("verify", "lemmas", "--n-max", "8", "--samples", "20", "--seed", "4")
    assert call(*argv) == call(*argv)
    assert call("enumerate", "unicyclic", "--n", "7") == call("enumerate", "unicyclic", "--n", "7")


@pytest.mark.parametrize(
    "argv, code",
    [
        (("compute", "C?x"), 2),
        (("compute", "C@"), 2),
        (("compute", ""), 2),
        (("compute", "Ch", "--params", "strength"), 2),
        (("compute", "Ch", "--bogus"), 2),
        (("frobnicate",), 2),
        ((), 2),
        (("construct", "min-tenacity", "--n", "4", "--m", "6"), 2),
        (("construct", "min-tenacity", "--n", "4"), 2),
        (("construct", "harary", "--n", "x", "--m", "3"), 2),
        (("enumerate", "connected", "--n", "5"), 2),
        (("enumerate", "trees", "--n", "13"), 3),
        (("enumerate", "connected", "--n", "8", "--m", "9", "--labeled"), 3),
        (("verify", "theorem1", "--n-max", "9"), 3),
        (("verify", "theorem2", "--seed", "3"), 2),
        (("compute", "/nonexistent/dir/"), 2),
    ],
)
def test_exit_codes(argv, code):
    got, out, err = call(*argv)
    assert got == code
    assert out == ""
    assert err.count("\n") == 1


def test_search_cap_override(monkeypatch):
    g6 = to_graph6(__import__("vulngraph").graph.path_graph(27)).decode()
    assert call("compute", g6, "--params", "connectivity")[0] == 3
    assert call("compute", g6, "--params", "connectivity", "--max-n", "27")[0] == 0
    monkeypatch.setenv("VULNGRAPH_MAX_N", "27")
    assert call("compute", g6, "--params", "connectivity")[0] == 0


def test_edge_list_errors(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("4 3\n0 1\n0 2\n")
    assert call("compute", str(path))[0] == 2
    path.write_text("4 1\n0 0\n")
    assert call("compute", str(path))[0] == 2
