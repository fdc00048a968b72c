import json

import pytest

from hadwiger_lab.cli import run

C5_PRINTED = """\
0 1 2 2 1
1 0 1 2 2
2 1 0 1 2
2 2 1 0 1
1 2 2 1 0"""


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_c5_matrix(capsys):
    code, out, _ = call(capsys, "analyze", "--gen", "cycle:5", "--base", "1")
    assert code == 0
    assert C5_PRINTED in out
    assert "chromatic number: 3" in out
    assert "separators:" in out


def test_analyze_is_byte_stable(capsys):
    first = call(capsys, "analyze", "--g6", "DQc")[1]
    assert call(capsys, "analyze", "--g6", "DQc")[1] == first


def test_analyze_json(capsys):
    code, out, _ = call(capsys, "analyze", "--gen", "complete:4", "--format", "json")
    d = json.loads(out)
    assert d["chi"] == 4 and d["clique_number"] == 4 and d["independence_number"] == 1


def test_greedy_example_graph(capsys):
    code, out, _ = call(capsys, "greedy", "--gen", "complete_minus_edge:4", "--base", "1", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["terminal_order"] == 3 and len(d["steps"]) == 1
    assert {d["steps"][0]["removed"], d["steps"][0]["survivor"]} != {1, 2}


def test_contract_prints_both_updaters(capsys):
    code, out, _ = call(capsys, "contract", "--gen", "cycle:5", "--base", "1", "--pair", "1", "2")
    assert code == 0
    assert "exact:\n0 1 2 1\n1 0 1 2\n2 1 0 1\n1 2 1 0" in out
    assert "diff: none" in out


def test_contract_reports_divergence(capsys):
    code, out, _ = call(capsys, "contract", "--g6", "Ck", "--pair", "0", "1", "--format", "json")
    assert code == 0 and json.loads(out)["mismatches"] == [[2, 3]]


def test_contract_non_adjacent(capsys):
    code, _, err = call(capsys, "contract", "--gen", "cycle:5", "--pair", "0", "2")
    assert code == 1
    assert "pair (0, 2) not available for contraction" in err


def test_hadwiger_and_budget(capsys):
    code, out, _ = call(capsys, "hadwiger", "--gen", "cycle:5")
    assert code == 0 and "hadwiger number: 3" in out
    code, _, err = call(capsys, "hadwiger", "--gen", "petersen")
    assert code == 2 and "max-oracle" in err
    code, out, _ = call(capsys, "hadwiger", "--gen", "petersen", "--max-oracle", "10")
    assert code == 0 and "hadwiger number: 5" in out


def test_chroma(capsys):
    code, out, _ = call(capsys, "chroma", "--gen", "cycle:5", "--format", "json")
    d = json.loads(out)
    assert d["chi"] == 3 and d["contraction_sensitive"] is True and d["edge_critical"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze"],
        ["analyze", "--g6", "D~"],
        ["analyze", "--gen", "wheel:5"],
        ["analyze", "--gen", "cycle:5", "--seed", "3"],
        ["analyze", "--gen", "gnp:5:0.5"],
        ["contract", "--gen", "cycle:5"],
        ["sweep", "--gen", "cycle:5"],
        ["analyze", "--input", "/nonexistent/file.g6"],
        ["analyze", "--gen", "cycle:5", "--max-chi", "0"],
    ],
)
def test_input_errors(capsys, argv):
    assert call(capsys, *argv)[0] == 1


def test_unknown_command():
    with pytest.raises(SystemExit) as info:
        run(["frobnicate", "--gen", "cycle:5"])
    assert info.value.code == 2


def test_gnp_seed_flag(capsys):
    a = call(capsys, "analyze", "--gen", "gnp:8:0.5", "--seed", "7")[1]
    b = call(capsys, "analyze", "--gen", "gnp:8:0.5:7")[1]
    assert a == b


def test_input_file(tmp_path, capsys):
    f = tmp_path / "graphs.g6"
    f.write_text(">>graph6<<D~{\n\nDhc\n")
    code, out, _ = call(capsys, "chroma", "--input", str(f))
    assert code == 0 and out.count("chromatic number") == 2


def test_sweep_writes_reports(tmp_path, capsys):
    code, out, _ = call(capsys, "sweep", "--gen", "connected:4", "--out", str(tmp_path))
    assert code == 0
    assert len((tmp_path / "audit.jsonl").read_text().splitlines()) == 1 + 1 + 4 + 38
    assert (tmp_path / "summary.csv").read_text().startswith("order,graphs,greedy_success")


def test_sweep_skip_only_exit(tmp_path, capsys):
    code, _, _ = call(capsys, "sweep", "--gen", "cycle:6", "--max-chi", "5", "--out", str(tmp_path))
    assert code == 2


def test_audit31(tmp_path, capsys):
    code, out, _ = call(capsys, "audit31", "--gen", "connected:4", "--out", str(tmp_path))
    assert code == 0 and "sensitive" in out
    assert json.loads((tmp_path / "theorem31.json").read_text())["schema_version"] == 1
