#!/usr/bin/env python3
"""
Тесты командной строки
"""

import json

import pytest

from config import get_config
from graphs.fixtures import star_tree_x
from main import build_parser, main


@pytest.fixture(autouse=True)
def workspace(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("ORNAMENT_LOG_FILE", str(tmp_path / "ornaments.log"))
    get_config.cache_clear()
    yield tmp_path
    get_config.cache_clear()


def emit(name: str, path) -> str:
    assert main(["fixtures", "emit", name, "--output", str(path)]) == 0
    return str(path)


def test_fixtures_list(capsys):
    assert main(["fixtures", "list"]) == 0
    names = capsys.readouterr().out.split()
    assert "X" in names and "D" in names


def test_fixtures_emit_to_stdout(capsys):
    assert main(["fixtures", "emit", "X"]) == 0
    assert json.loads(capsys.readouterr().out) == star_tree_x().to_dict()


def test_fixtures_emit_requires_name():
    assert main(["fixtures", "emit"]) == 2


def test_unknown_fixture_is_usage_error():
    assert main(["fixtures", "emit", "nope"]) == 2


def test_enumerate_broom(capsys, workspace):
    csv_path = workspace / "brooms.csv"
    assert main(["enumerate", "broom", "--m", "2", "--n", "3", "--csv", str(csv_path)]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "42"
    assert csv_path.read_text(encoding="utf-8").splitlines()[3] == "2,1,4,13,42"


def test_enumerate_broom_requires_m():
    assert main(["enumerate", "broom", "--n", "3"]) == 2


def test_enumerate_comb_with_bijections(capsys):
    assert main(["enumerate", "comb", "--n", "2", "--bijections"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "10"
    assert json.loads(lines[1])["success"] is True


def test_build_writes_dot_and_json(workspace):
    graph = emit("I3", workspace / "i3.json")
    assert main(["build", "orn", "--input", graph, "--dot", "orn.dot", "--json", "orn.json"]) == 0
    assert (workspace / "orn.dot").read_text(encoding="utf-8").startswith("digraph orn {")
    data = json.loads((workspace / "orn.json").read_text(encoding="utf-8"))
    assert len(data["elements"]) == 5
    assert len(data["covers"]) == 5


def test_check_lattice_and_unstarred(workspace):
    x = emit("X", workspace / "x.json")
    assert main(["check", "unstarred", "--input", x]) == 1
    assert main(["check", "lattice", "--input", x, "--poset", "aorn"]) == 1
    assert main(["check", "lattice", "--input", x, "--poset", "orn"]) == 0
    assert main(["check", "semidistributive", "--input", x, "--poset", "orn"]) == 0


def test_check_pic_and_sparsity(workspace):
    crossing = workspace / "crossing.json"
    crossing.write_text(json.dumps({
        "tree": {"n": 6, "edges": [[1, 3], [2, 3], [3, 4], [4, 5], [4, 6]]},
        "hyperedges": [[1, 3, 4, 5], [2, 3, 4, 6]],
    }), encoding="utf-8")
    assert main(["check", "pic", "--input", str(crossing)]) == 1
    assert main(["check", "star-sparse", "--input", str(crossing)]) == 0


def test_polytope_skeleton(workspace, capsys):
    graph = emit("I3", workspace / "i3.json")
    assert main(["polytope", "skeleton", "--input", graph, "--json", "skeleton.json"]) == 0
    assert "решётка: True" in capsys.readouterr().out
    data = json.loads((workspace / "skeleton.json").read_text(encoding="utf-8"))
    assert len(data["points"]) == 5


def test_verify_writes_report(workspace):
    assert main(["verify", "fixtures", "--json", "report.json"]) == 0
    data = json.loads((workspace / "report.json").read_text(encoding="utf-8"))
    assert data["suite"] == "fixtures"
    assert data["passed"] is True


def test_size_guard_exit_code(workspace, monkeypatch):
    graph = emit("I4", workspace / "i4.json")
    monkeypatch.setenv("ORNAMENT_MAX_ORNAMENTATIONS", "3")
    get_config.cache_clear()
    assert main(["build", "orn", "--input", graph]) == 3


def test_library_error_exit_code(workspace):
    bad = workspace / "loop.json"
    bad.write_text(json.dumps({"n": 2, "edges": [[1, 1]]}), encoding="utf-8")
    assert main(["build", "orn", "--input", str(bad)]) == 4


def test_missing_input_is_usage_error():
    assert main(["build", "orn", "--input", "missing.json"]) == 2


def test_parser_rejects_unknown_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["explode"])
