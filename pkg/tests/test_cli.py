"""Command-line interface: subcommands, formats, and exit codes."""

import json

import pytest

from tcreal.cli import main
from tcreal.graphstore import LabeledMultigraph


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- check ----------------------------------------------------------------


def test_check_realizable(capsys):
    code, out, _ = run(capsys, "check", "2", "2", "2", "2")
    assert code == 0
    assert "realizable=yes" in out
    assert "reason=OkC4Pivotable" in out


def test_check_not_realizable(capsys):
    code, out, _ = run(capsys, "check", "0", "0")
    assert code == 1
    assert "realizable=no" in out


def test_check_parse_error(capsys):
    code, _, err = run(capsys, "check", "2", "x", "2")
    assert code == 2
    assert "input error" in err


def test_check_json_format(capsys):
    code, out, _ = run(capsys, "check", "--format", "json", "3,3,3,3")
    assert code == 0
    report = json.loads(out)
    assert report["sequence"] == [3, 3, 3, 3]
    assert report["realizable"] is True
    assert report["reason"] == "OkTwoEdgeDisjoint"


def test_check_reads_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("2 2 2 2\n0 0\n"))
    code, out, _ = run(capsys, "check")
    assert code == 1  # one of the sequences is not realizable
    assert out.count("\n") == 2


def test_check_multi_mode(capsys):
    code, out, _ = run(capsys, "check", "--mode", "multi", "4,2,2,2,2")
    assert code == 0
    code, _, _ = run(capsys, "check", "--mode", "simple", "4,2,2,2,2")
    assert code == 1


# -- build ----------------------------------------------------------------


def test_build_json_document(capsys):
    code, out, _ = run(capsys, "build", "3", "3", "3", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 4
    assert len(doc["edges"]) == 6
    assert all(e["label"] >= 1 for e in doc["edges"])
    trees = {e["tree"] for e in doc["edges"]}
    assert trees <= {"t1", "t2", "both", "none"}


def test_build_not_realizable(capsys):
    code, out, _ = run(capsys, "build", "1", "1", "1")
    assert code == 1
    assert json.loads(out)["reason"] == "NotGraphical"


def test_build_multi_boundary(capsys):
    code, out, _ = run(capsys, "build", "--mode", "multi", "4,2,2,2,2")
    assert code == 0
    doc = json.loads(out)
    assert doc["mode"] == "multi"
    assert doc["central_cycle"] is not None


def test_build_dot_output(capsys):
    code, out, _ = run(capsys, "build", "--format", "dot", "2,2,2,2")
    assert code == 0
    assert out.startswith("graph G {")
    assert "--" in out


def test_build_out_file_and_report(capsys, tmp_path):
    path = tmp_path / "graph.json"
    code, out, _ = run(
        capsys, "build", "--format", "json", "--out", str(path),
        "3", "3", "3", "3",
    )
    assert code == 0
    report = json.loads(out)
    assert report["certificate"] == "two-edge-disjoint"
    assert report["shared_edges"] == 0
    g = LabeledMultigraph.from_json(path.read_text())
    assert g.n == 4


def test_build_no_verify_still_builds(capsys):
    code, out, _ = run(capsys, "build", "--no-verify", "2,2,2,2")
    assert code == 0
    assert json.loads(out)["n"] == 4


# -- verify ---------------------------------------------------------------


def test_build_verify_roundtrip(capsys, tmp_path):
    for seq, mode in [("3 3 3 3", "simple"), ("4 2 2 2 2", "multi"),
                      ("3 3 3 3 3 3", "simple")]:
        path = tmp_path / "g.json"
        code, _, _ = run(
            capsys, "build", "--mode", mode, "--out", str(path), seq
        )
        assert code == 0
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 0, out
        assert "OK" in out


def test_verify_detects_improper_labels(capsys, tmp_path):
    doc = {
        "mode": "simple",
        "n": 4,
        "edges": [
            {"id": 0, "u": 0, "v": 1, "tree": "none", "label": 1},
            {"id": 1, "u": 1, "v": 2, "tree": "none", "label": 1},
            {"id": 2, "u": 2, "v": 3, "tree": "none", "label": 2},
            {"id": 3, "u": 3, "v": 0, "tree": "none", "label": 2},
        ],
        "central_cycle": None,
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert "properness" in out


def test_verify_detects_unreachable_pair(capsys, tmp_path):
    doc = {
        "mode": "simple",
        "n": 3,
        "edges": [
            {"id": 0, "u": 0, "v": 1, "tree": "none", "label": 2},
            {"id": 1, "u": 1, "v": 2, "tree": "none", "label": 1},
        ],
        "central_cycle": None,
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert "temporal connectivity" in out


def test_verify_rejects_malformed_file(capsys, tmp_path):
    doc = {
        "mode": "simple",
        "n": 2,
        "edges": [
            {"id": 0, "u": 0, "v": 9, "tree": "none", "label": 1},
        ],
        "central_cycle": None,
    }
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "verify", str(path))
    assert code == 2
    code, _, err = run(capsys, "verify", str(tmp_path / "missing.json"))
    assert code == 2


# -- oracle ---------------------------------------------------------------


def test_oracle_sweep_agrees(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "4", "--mode", "simple")
    assert code == 0
    assert "0 disagreements" in out


def test_oracle_cap_enforced(capsys):
    code, _, err = run(capsys, "oracle", "--n", "9", "--mode", "simple")
    assert code == 2
    assert "cap" in err
    code, _, _ = run(capsys, "oracle", "--n", "6", "--mode", "multi")
    assert code == 2


def test_oracle_json_report(capsys):
    code, out, _ = run(
        capsys, "oracle", "--n", "3", "--mode", "multi", "--format", "json"
    )
    assert code == 0
    report = json.loads(out)
    assert report["disagreements"] == []
    assert report["sequences_checked"] > 0


# -- bench ----------------------------------------------------------------


def test_bench_runs(capsys):
    code, out, _ = run(
        capsys, "bench", "--sizes", "1000,2000", "--format", "json"
    )
    assert code == 0
    report = json.loads(out)
    assert [row["n"] for row in report["runs"]] == [1000, 2000]
    assert all(row["seconds"] >= 0 for row in report["runs"])


def test_bench_rejects_bad_sizes(capsys):
    code, _, err = run(capsys, "bench", "--sizes", "10,abc")
    assert code == 2
