import json

import pytest

from centrascope.cli import parse_range, run


def test_enum_writes_file(tmp_path):
    out = tmp_path / "g6.txt"
    assert run(["enum", "-n", "6", "-o", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 112


def test_enum_stdout(capsys):
    assert run(["enum", "-n", "4"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 6


def test_analyze_k2(capsys):
    assert run(["analyze", "--graph6", "A_"]) == 0
    out = capsys.readouterr().out
    for kind in ("subgraph", "degree", "eigenvector", "closeness", "betweenness"):
        assert f"{kind}:" in out
    assert "1.54308063482" in out
    assert "walk_regular=yes" in out
    assert "zero spread: subgraph=yes degree=yes" in out


def test_analyze_rejects(capsys):
    assert run(["analyze", "--graph6", "A?"]) == 2
    assert run(["analyze", "--graph6", "A"]) == 2
    assert "error" in capsys.readouterr().err


def test_table1_csv_and_strict(tmp_path):
    out = tmp_path / "t1.csv"
    assert run(["table1", "--range", "5..6", "-o", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "n,measure,computed,paper,match"
    assert len(lines) == 11
    assert run(["table1", "--range", "5..6", "-o", str(out), "--strict"]) == 1
    assert run(["table1", "--range", "5", "-o", str(out), "--strict"]) == 0


def test_table1_text_default(capsys):
    assert run(["table1", "-r", "5"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].split()[:3] == ["n", "subgraph", "degree"]


def test_conjectures_text(capsys):
    assert run(["conjectures", "--which", "3", "--range", "5..6"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == [
        "conjecture 3 [generated:n=5]: holds-on-corpus (21 graphs checked, 0 excluded)",
        "conjecture 3 [generated:n=6]: holds-on-corpus (112 graphs checked, 0 excluded)",
    ]


def test_conjectures_json(tmp_path):
    out = tmp_path / "c.json"
    assert run(["conjectures", "--which", "1,2", "-r", "6", "-o", str(out), "-f", "json"]) == 0
    payload = json.loads(out.read_text())
    assert [p["conjecture"] for p in payload] == [1, 2]
    assert payload[1]["excluded"]


def test_classify_records_and_conjecture(tmp_path, capsys):
    corpus = tmp_path / "in.g6"
    assert run(["enum", "-n", "5", "-o", str(corpus)]) == 0
    out = tmp_path / "rec.csv"
    assert run(["classify", "-i", str(corpus), "-o", str(out)]) == 0
    rows = out.read_text().splitlines()
    assert len(rows) == 22 and rows[0].startswith("n,graph6,subgraph")
    assert run(["classify", "-i", str(corpus), "--conjecture", "1"]) == 0
    assert "holds-on-corpus" in capsys.readouterr().out


def test_classify_missing_file(tmp_path):
    assert run(["classify", "-i", str(tmp_path / "nope.g6")]) == 2


def test_workers_env_and_determinism(tmp_path, monkeypatch):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(["table1", "-r", "5..6", "-o", str(a), "-w", "1"]) == 0
    monkeypatch.setenv("CENTRASCOPE_WORKERS", "2")
    assert run(["table1", "-r", "5..6", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("argv", [
    ["enum"],
    ["enum", "-n", "11"],
    ["enum", "-n", "4", "--bogus"],
    ["frobnicate"],
    ["conjectures", "--which", "4"],
    ["table1", "-r", "x..y"],
    ["table1", "-w", "0"],
])
def test_usage_errors(argv):
    assert run(argv) == 2


@pytest.mark.parametrize("sub", ["enum", "analyze", "table1", "conjectures", "classify"])
def test_help(sub, capsys):
    assert run([sub, "--help"]) == 0
    assert "usage" in capsys.readouterr().out


def test_parse_range():
    assert parse_range("5..8") == [5, 6, 7, 8]
    assert parse_range("6") == [6]
    assert parse_range("1,3") == [1, 3]


def test_classify_imported_walk_regular_corpus(tmp_path, capsys):
    # the five 8-node walk-regular graphs that are not distance-regular
    corpus = tmp_path / "h8.g6"
    corpus.write_text(">>graph6<<G@Umf?\nGJem^_\nGJemvG\nGK~vno\nGLvnno\n")
    assert run(["classify", "-i", str(corpus), "--conjecture", "1,2", "-f", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["verdict"] == "holds-on-corpus" and payload[0]["checked"] == 5
    assert len(payload[1]["excluded"]) == 5 and payload[1]["checked"] == 0
