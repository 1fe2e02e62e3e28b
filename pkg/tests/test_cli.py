import json
import importlib

import pytest

from WeiContainers import __version__
from WeiContainers.cli import main, load_workspace
from WeiContainers.containers import Container

cli_main_module = importlib.import_module("WeiContainers.cli.main")

WORKSPACE = {
    "settings": {"bound": 7, "budget": 10000},
    "bindings": {
        "A": {"type": "container", "fibers": {"u": ["x"]}},
        "B": {"type": "container", "fibers": {"v": ["y", "z"]}},
        "T": {"type": "container", "fibers": {"t": []}},
        "f": {"type": "problem", "inputs": ["a"], "outputs": ["0", "1"], "solutions": {"a": ["0", "1"]}},
        "g": {"type": "problem", "inputs": ["b"], "outputs": ["0"], "solutions": {"b": ["0"]}},
        "w": {"type": "predicate", "theta": {"zero": [["zero"], ["one"]]}},
        "k": {"type": "term", "term": "ident"},
    },
}


@pytest.fixture
def ws(tmp_path):
    path = tmp_path / "ws.json"
    path.write_text(json.dumps(WORKSPACE), encoding="utf-8")
    return str(path)


def test_reduce_verdicts(ws, capsys):
    assert main(["reduce", ws, "A", "T"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("A <= T: REDUCIBLE")
    assert f"WeiContainers {__version__}" in out

    assert main(["reduce", ws, "T", "A"]) == 1
    assert "NOT-REDUCIBLE" in capsys.readouterr().out

def test_reduce_usage_errors(ws, capsys):
    assert main(["reduce", ws, "A", "missing"]) == 64
    assert "missing" in capsys.readouterr().err
    assert main(["reduce", ws, "A", "k"]) == 64
    assert main(["reduce", str(ws) + ".absent", "A", "B"]) == 64

def test_reduce_unknown_at_bound(ws, capsys, monkeypatch):
    monkeypatch.setattr(cli_main_module, "search_ext_reduction", lambda *args: None)
    assert main(["reduce", ws, "w", "w", "--bound", "3"]) == 2
    out = capsys.readouterr().out
    assert "UNKNOWN-AT-BOUND" in out
    assert "size <= 3" in out

@pytest.mark.parametrize("a, b, kind", [("A", "B", "container"), ("f", "g", "problem"), ("w", "w", "predicate")])
def test_witness_round_trip(ws, tmp_path, capsys, a, b, kind):
    assert main(["reduce", ws, a, b, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["type"] == kind
    assert report["verdict"] == "REDUCIBLE"
    assert report["version"] == __version__
    assert report["settings"] == {"bound": 7, "budget": 10000}

    path = tmp_path / "witness.json"
    path.write_text(json.dumps(report), encoding="utf-8")
    assert main(["reduce", ws, a, b, "--verify", str(path)]) == 0
    assert capsys.readouterr().out.strip() == f"{a} <= {b}: VERIFIED"

def test_tampered_witness_is_rejected(ws, tmp_path, capsys):
    main(["reduce", ws, "A", "B", "--json"])
    report = json.loads(capsys.readouterr().out)
    report["witness"]["backward"] = {label: "nowhere" for label in report["witness"]["backward"]}

    path = tmp_path / "witness.json"
    path.write_text(json.dumps(report), encoding="utf-8")
    assert main(["reduce", ws, "A", "B", "--verify", str(path), "--json"]) == 1
    assert json.loads(capsys.readouterr().out)["verified"] is False

    del report["witness"]
    path.write_text(json.dumps(report), encoding="utf-8")
    assert main(["reduce", ws, "A", "B", "--verify", str(path)]) == 1
    assert "REJECTED" in capsys.readouterr().out


def test_expr(ws, capsys):
    assert main(["expr", ws, "A x B", "--eval", "2", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["cardinality"] == 8
    assert report["container"]["kind"] == "finset"

    assert main(["expr", ws, "A star B", "--eval", "2"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "|[_](2)| = 4"

    assert main(["expr", ws, "(A + B) par T"]) == 0
    assert capsys.readouterr().out.startswith("_ = ")

def test_expr_errors(ws, capsys):
    assert main(["expr", ws, "w star w"]) == 64
    assert main(["expr", ws, "A + w"]) == 64
    assert main(["expr", ws, "A x (B"]) == 64
    assert main(["expr", ws, "A x k"]) == 64
    assert main(["expr", ws, "A ; B"]) == 64
    assert main(["expr", ws, "A", "--name", "B"]) == 64

def test_expr_writes_workspace(ws, tmp_path, capsys):
    out = tmp_path / "out.json"
    assert main(["expr", ws, "A + T", "--name", "C", "--out", str(out)]) == 0
    loaded = load_workspace(str(out))
    assert isinstance(loaded["C"], Container)
    assert len(loaded["C"].positions) == 2

    assert main(["reduce", str(out), "T", "C"]) == 0


def test_laws(capsys):
    assert main(["laws", "tensor", "answerability", "--sizes", "2", "--seed", "4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1].endswith(f"0 failures (seed 4, WeiContainers {__version__})")
    assert lines[0] == "sizes 2, bound 7, budget 10000, seed 4"
    assert all(line.startswith("PASS") for line in lines[1:-1])

def test_laws_reports_overridden_bounds(capsys):
    assert main(["laws", "answerability", "--bound", "3", "--budget", "500"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "sizes 3, bound 3, budget 500, seed 0"

def test_laws_json(capsys):
    assert main(["laws", "answerability", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert [s["suite"] for s in report["suites"]] == ["answerability"]
    assert report["suites"][0]["passed"]

def test_laws_unknown_suite(capsys):
    assert main(["laws", "nonsense"]) == 64


def test_poset(ws, tmp_path, capsys):
    first, second = tmp_path / "first.dot", tmp_path / "second.dot"
    assert main(["poset", ws, "A", "B", "T", "--dot", str(first)]) == 0
    assert capsys.readouterr().out.splitlines() == ["A ~ B", "T"]
    assert main(["poset", ws, "T", "B", "A", "--dot", str(second)]) == 0
    assert first.read_text(encoding="utf-8") == second.read_text(encoding="utf-8")
    assert f"WeiContainers {__version__}" in first.read_text(encoding="utf-8")

def test_poset_to_stdout(ws, capsys):
    assert main(["poset", ws, "f", "g"]) == 0
    assert capsys.readouterr().out.startswith("// WeiContainers")

def test_poset_rejects_mixed_kinds(ws):
    assert main(["poset", ws, "A", "w"]) == 64


def test_version(capsys):
    with pytest.raises(SystemExit) as e:
        main(["--version"])
    assert e.value.code == 0
    assert __version__ in capsys.readouterr().out
