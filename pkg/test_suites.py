#!/usr/bin/env python3
"""
Тесты отчётов и наборов проверок
"""

import json

import pytest

import structures.reorient
from errors import NotATreeError, SizeGuardError
from graphs.fixtures import increasing_path, star_tree_x
from reports.report import SCHEMA_VERSION, CheckRecord, VerificationReport, write_json
from structures.ornament import _acyclic_masks
from suites import fixtures as fixture_suite
from suites import quotient as quotient_suite
from suites.base_suite import instance_key, timed_check
from suites.macneille import check_tree as macneille_check
from suites.registry import create_suite, run_suite, suite_names
from suites.starred import starred_conditions


def test_check_record_omits_wall_time():
    record = CheckRecord("name", "instance", True, None, 1.5)
    assert record.to_dict() == {"name": "name", "instance": "instance", "verdict": True, "witness": None}


def test_report_save_and_load(tmp_path):
    report = VerificationReport("demo", {"n": 3})
    report.add(CheckRecord("b", "x", True))
    report.add(CheckRecord("a", "y", False, {"pair": [1, 2]}))
    report.coverage["trees"] = 2
    path = tmp_path / "report.json"
    report.save(str(path))

    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["schema"] == SCHEMA_VERSION
    assert data["passed"] is False
    assert data["failures"] == 1

    loaded = VerificationReport.load(str(path))
    assert loaded.to_dict() == report.to_dict()
    assert [r.name for r in loaded.failures] == ["a"]


def test_report_rejects_unknown_schema(tmp_path):
    path = tmp_path / "old.json"
    path.write_text(json.dumps({"schema": 0, "suite": "demo"}), encoding="utf-8")
    with pytest.raises(ValueError):
        VerificationReport.load(str(path))


def test_report_extend_and_sort():
    merged = VerificationReport("all")
    part = VerificationReport("trees", coverage={"trees": 4})
    part.add(CheckRecord("z", "n1:", True))
    part.add(CheckRecord("a", "n2:12", True))
    merged.extend(part)
    merged.sort()
    assert [r.name for r in merged.records] == ["a", "z"]
    assert merged.coverage == {"trees.trees": 4}
    assert "all" in merged.summary()


def test_write_json(tmp_path):
    path = tmp_path / "out.json"
    text = write_json({"b": 1, "a": "я"}, str(path))
    assert text == path.read_text(encoding="utf-8")
    assert text.index('"a"') < text.index('"b"')
    assert "я" in text


def test_timed_check_records_library_errors():
    def broken():
        raise NotATreeError("не дерево")

    record = timed_check("demo", "inst", broken)
    assert not record.verdict
    assert record.witness.startswith("NotATreeError")


def test_timed_check_reraises_size_guard():
    def too_big():
        raise SizeGuardError("перебор", 10, 5)

    with pytest.raises(SizeGuardError):
        timed_check("demo", "inst", too_big)


def test_instance_key():
    assert instance_key(increasing_path(3)) == "n3:12,23"


def test_registry():
    assert suite_names()[-1] == "all"
    assert "fixtures" in suite_names()
    with pytest.raises(KeyError):
        create_suite("nope")


@pytest.mark.parametrize("name", sorted(fixture_suite.CHECKS))
def test_fixture_checks(name):
    verdict, witness = fixture_suite.CHECKS[name]()
    assert verdict, witness


def test_starred_conditions_agree():
    assert set(starred_conditions(star_tree_x()).values()) == {True}
    assert set(starred_conditions(increasing_path(4)).values()) == {False}


def test_macneille_checks_on_star_tree():
    records = macneille_check(star_tree_x())
    assert [r.name for r in records] == ["macneille_areori_rbi", "macneille_asour_orn", "macneille_irreducible_core"]
    assert all(r.verdict for r in records)


def test_suite_state_is_tracked():
    suite = create_suite("fixtures")
    report = suite.execute(0)
    status = suite.get_status()
    assert report.passed
    assert status["checks_completed"] == len(fixture_suite.CHECKS)
    assert status["error_count"] == 0
    assert not status["is_active"]


def test_all_suites_pass_on_small_trees():
    report = run_suite("all", 3)
    assert report.passed, [r.to_dict() for r in report.failures]
    assert report.coverage["trees.trees"] == 5


def test_runs_are_deterministic():
    first = run_suite("trees", 4).to_dict()
    second = run_suite("trees", 4).to_dict()
    assert first == second


def test_counts_suite():
    report = run_suite("counts", 4)
    assert report.passed, [r.to_dict() for r in report.failures]


def test_aorn_check_uses_permutations(monkeypatch):
    assert quotient_suite._aorn_is_orn(increasing_path(3)) == (True, None)
    _acyclic_masks.cache_clear()
    monkeypatch.setattr(structures.reorient, "acyclic_reorientations", lambda d: [])
    try:
        verdict, witness = quotient_suite._aorn_is_orn(increasing_path(3))
        assert not verdict
        assert witness == "0 ≠ 5"
    finally:
        _acyclic_masks.cache_clear()


def test_tree_coverage_counts_labelings():
    coverage = run_suite("trees", 4).coverage
    assert coverage["trees"] == 13
    assert coverage["increasing_labelings"] == 21


def test_intreeval_suite_covers_every_labeling():
    report = run_suite("intreeval", 4)
    assert report.passed, [r.to_dict() for r in report.failures]
    assert report.coverage["trees"] == 1 + 3 + 16
    assert len(report.records) == 20
