import io
import json
import subprocess
import sys

import pytest

from bicliquebounds.cli import main, parse_graph_text
from bicliquebounds.families import crown_cycle
from bicliquebounds.graph import GraphError, from_edges, parse_edge_list, parse_graph6, to_edge_list

from conftest import census_path


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bicliques_inline_g6(capsys):
    code, out, _ = run(capsys, "bicliques", "--g6", "Bw", "--count-only")
    assert code == 0 and out.strip() == "3"


def test_bicliques_count_crown_from_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "bicliques", "-i", "-", "--count-only",
                       stdin=to_edge_list(crown_cycle(5)), monkeypatch=monkeypatch)
    assert code == 0 and out.strip() == "5"


def test_bicliques_containing(capsys, monkeypatch):
    code, out, _ = run(capsys, "bicliques", "-i", "-", "--containing", "0", "-o", "json",
                       stdin="4 3\n0 1\n1 2\n2 3\n", monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out) == [{"a": [0, 2], "b": [1]}]


def test_bicliques_from_file(capsys, tmp_path):
    f = tmp_path / "k3.g6"
    f.write_text("Bw\n")
    code, out, _ = run(capsys, "bicliques", "--input", str(f), "-o", "json")
    assert code == 0 and len(json.loads(out)) == 3


def test_bad_input_exits_1(capsys):
    code, _, err = run(capsys, "bicliques", "--g6", "B")
    assert code == 1 and "error" in err
    code, _, _ = run(capsys, "bicliques")
    assert code == 1


def test_usage_error_exits_1():
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 1


def test_format_detection():
    assert parse_graph_text("2 1\n0 1\n") == from_edges(2, [(0, 1)])
    assert parse_graph_text("Bw\n") == parse_graph6("Bw")
    with pytest.raises(GraphError):
        parse_graph_text("Bw\nBw\n")
    with pytest.raises(GraphError):
        parse_graph_text("   \n")


def test_twins_reduce_and_classes(capsys, monkeypatch):
    code, out, _ = run(capsys, "twins", "-i", "-", "--reduce",
                       stdin="7 12\n" + "".join(f"{a} {b}\n" for a in range(3) for b in range(3, 7)),
                       monkeypatch=monkeypatch)
    assert code == 0 and out.strip() == "A_"
    code, out, _ = run(capsys, "twins", "-i", "-", "--classes", "-o", "json",
                       stdin="4 3\n0 1\n1 2\n2 3\n", monkeypatch=monkeypatch)
    assert json.loads(out)["classes"] == [[0], [1], [2], [3]]
    code, out, _ = run(capsys, "twins", "-i", "-", "--reduce", stdin="4 4\n0 1\n1 2\n2 3\n3 0\n",
                       monkeypatch=monkeypatch)
    assert out.strip() == "A_"


def test_classify(capsys, monkeypatch):
    code, out, _ = run(capsys, "classify", "-i", "-", stdin=to_edge_list(crown_cycle(5)), monkeypatch=monkeypatch)
    info = json.loads(out)
    assert code == 0 and info["c4Free"] and info["diamondFree"] and info["twinFree"]
    code, out, _ = run(capsys, "gen", "--family", "figure2", "--format", "edges")
    _, out, _ = run(capsys, "classify", "-i", "-", stdin=out, monkeypatch=monkeypatch)
    assert json.loads(out)["goodAssignment"] == "infeasible(20)"
    _, out, _ = run(capsys, "classify", "--g6", "C~")
    assert json.loads(out)["aloneVertices"] == []


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "--g6", "D~{", "--verify", "-o", "json")
    payload = json.loads(out)
    assert code == 0 and payload["verified"] and len(payload["witness"]) == 5
    code, _, err = run(capsys, "witness", "--g6", "Bg")  # P3: twin leaves
    assert code == 2 and "false_twins" in err


def test_witness_augmented_crown(capsys, monkeypatch):
    from bicliquebounds.witness import augment_pendants
    g = augment_pendants(crown_cycle(5)).graph
    code, out, _ = run(capsys, "witness", "-i", "-", "--verify", "-o", "json",
                       stdin=to_edge_list(g), monkeypatch=monkeypatch)
    payload = json.loads(out)
    assert code == 0 and payload["verified"]
    assert len({json.dumps(b, sort_keys=True) for b in payload["witness"].values()}) == 20


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "--family", "powerset", "--k", "3")
    assert code == 0 and parse_graph6(out.strip()).n == 10
    code, out, _ = run(capsys, "gen", "--family", "crown", "--k", "5")
    assert parse_graph6(out.strip()) == crown_cycle(5)
    code, _, err = run(capsys, "gen", "--family", "powerset", "--k", "7")
    assert code == 1 and "edges" in err
    code, out, _ = run(capsys, "gen", "--family", "powerset", "--k", "7", "--format", "edges")
    assert code == 0 and parse_edge_list(out).n == 134
    code, _, _ = run(capsys, "gen", "--family", "crown", "--k", "3")
    assert code == 1
    code, _, _ = run(capsys, "gen", "--family", "crown")
    assert code == 1


def test_census_examples(capsys, tmp_path):
    code, out, _ = run(capsys, "census", "--n", "5", "--class", "k3free-twinfree", "--check", "bound")
    assert code == 0 and "violations: 0" in out
    code, out, _ = run(capsys, "census", "--n", "6", "--class", "twinfree", "--check", "properties", "-o", "csv")
    assert code == 0 and out.splitlines()[1].endswith(",0")
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "census", "--input", str(census_path(8)), "--class", "twinfree-bipartite",
                       "--check", "bound", "--out", str(report), "-o", "json")
    assert code == 0 and json.loads(report.read_text()) == json.loads(out)


def test_census_violation_exit_code(capsys):
    code, out, _ = run(capsys, "census", "--n", "5", "--class", "tree-twinfree", "--bound", "n")
    assert code == 2


def test_census_other_checks(capsys):
    for check in ("conjecture1", "conjecture2", "witness", "accounting"):
        code, _, _ = run(capsys, "census", "--n", "6", "--check", check)
        assert code == 0, check
    code, out, _ = run(capsys, "census", "--n", "7", "--check", "tree-spectrum", "-o", "json")
    assert code == 0 and json.loads(out)["gaps"] == []


def test_census_sampling_is_seeded(capsys):
    args = ["census", "--input", str(census_path(7)), "--sample", "50", "--seed", "3", "-o", "json"]
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "wall_time"}
    assert strip(a) == strip(b)


def test_census_needs_a_source(capsys):
    assert run(capsys, "census", "--check", "bound")[0] == 1
    assert run(capsys, "census", "--n", "8")[0] == 1


def test_census_reports_bad_lines(capsys, tmp_path):
    f = tmp_path / "bad.g6"
    f.write_text("A_\nzz\nBw\n")
    code, _, err = run(capsys, "census", "--input", str(f), "--class", "all")
    assert code == 1 and "line 2" in err


def test_jobs_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("BICLIQUE_JOBS", "2")
    code, out, _ = run(capsys, "census", "--n", "5", "-o", "json")
    assert code == 0 and json.loads(out)["graphs_examined"] == 11


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "bicliquebounds", "bicliques", "--g6", "Bw", "--count-only"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.strip() == "3"
