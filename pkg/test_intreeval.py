#!/usr/bin/env python3
"""
Тесты интривальных гиперграфов: PIC, звёздная разреженность, формулы объединения
"""

import pytest

import structures.intreeval
from errors import BudgetExceededError, HypothesisError, IncomparablePairError, OrnamentError
from graphs.digraph import Digraph, path_hypergraph
from graphs.fixtures import increasing_path
from structures.intreeval import (IntreevalHypergraph, asour_join, asour_meet, characterization_check,
                                  check_subhypergraph, is_intersection_closed, is_path_intersection_closed,
                                  is_star_sparse, maxorn, minimal_cycle_lengths, minorn,
                                  path_intersection_counterexample, quasi_lattice_check, sour_restricted,
                                  sourcing_fiber, star_graph, star_sparse_witness)
from structures.ornament import maximal_ornamentation, minimal_ornamentation
from structures.sourcing import Sourcing, max_sourcing, min_sourcing

SPLIT_TREE = Digraph(6, frozenset({(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)}))
I3 = increasing_path(3)


@pytest.fixture
def full_path():
    return IntreevalHypergraph(I3, path_hypergraph(I3))


def test_hyperedges_must_be_tree_paths():
    with pytest.raises(OrnamentError):
        IntreevalHypergraph.of(I3, [[1, 3]])
    with pytest.raises(OrnamentError):
        IntreevalHypergraph.of(Digraph(2, frozenset({(2, 1)})), [[1, 2]])


def test_crossing_pair_is_not_pic():
    ii = IntreevalHypergraph.of(SPLIT_TREE, [[1, 3, 4, 5], [2, 3, 4, 6]])
    assert path_intersection_counterexample(ii) == (frozenset({1, 3, 4, 5}), frozenset({2, 3, 4, 6}))
    assert not is_intersection_closed(ii)
    assert is_star_sparse(ii)
    with pytest.raises(HypothesisError):
        asour_join(ii, [min_sourcing(ii.hypergraph)])


def test_star_cycle_is_pic_but_not_sparse():
    ii = IntreevalHypergraph.of(SPLIT_TREE, [[1, 3, 4, 5], [2, 3, 4, 5], [2, 3, 4, 6], [1, 3, 4, 6]])
    assert is_path_intersection_closed(ii)
    assert star_sparse_witness(ii) == (3, 4, [1, 5, 2, 6])
    assert check_subhypergraph(ii)["lattice"] is False


def test_star_graph():
    ii = IntreevalHypergraph.of(SPLIT_TREE, [[1, 3, 4, 5], [2, 3, 4, 6]])
    star = star_graph(ii, 3, 4)
    assert star.left == (1, 2)
    assert star.right == (5, 6)
    assert star.edges == {(1, 5), (2, 6)}
    with pytest.raises(IncomparablePairError):
        star_graph(ii, 1, 2)


def test_full_path_hypergraph(full_path):
    assert is_path_intersection_closed(full_path)
    assert is_intersection_closed(full_path)
    assert is_star_sparse(full_path)
    verdict = check_subhypergraph(full_path)
    assert verdict["lattice"] and verdict["join_formula_ok"]


def test_join_and_meet_formulas(full_path):
    low, high = min_sourcing(full_path.hypergraph), max_sourcing(full_path.hypergraph)
    assert asour_join(full_path, [low, high]) == high
    assert asour_meet(full_path, [low, high]) == low


def test_projections(full_path):
    low, high = min_sourcing(full_path.hypergraph), max_sourcing(full_path.hypergraph)
    assert sour_restricted(full_path, maximal_ornamentation(I3)) == high
    assert minorn(full_path, low) == minimal_ornamentation(I3)
    assert maxorn(full_path, high) == maximal_ornamentation(I3)
    assert minimal_ornamentation(I3) in sourcing_fiber(full_path, low)


def test_quasi_lattice(full_path):
    report = quasi_lattice_check(full_path)
    assert report.sourcings == 5
    assert report.success


def test_minimal_cycles_of_cyclic_sourcing(full_path):
    cyclic = Sourcing(full_path.hypergraph, (2, 1, 3))
    assert minimal_cycle_lengths(full_path, cyclic) == [2, 2]


def test_characterization_on_small_tree():
    report = characterization_check(I3)
    assert report.total == 8
    assert report.checked == 8
    assert not report.sampled
    assert report.success
    assert report.quasi_lattice_checked == 8
    assert report.cycles_checked == 8
    assert report.cycles_skipped == 0


def test_projection_properties_of_subhypergraph(full_path):
    verdict = check_subhypergraph(full_path)
    assert verdict["no_two_cycles"]
    assert verdict["short_cycles_ok"]
    assert verdict["quasi_lattice_ok"]
    assert check_subhypergraph(full_path, cycle_limit=5)["short_cycles_ok"] is None
    crossing = IntreevalHypergraph.of(SPLIT_TREE, [[1, 3, 4, 5], [2, 3, 4, 6]])
    assert check_subhypergraph(crossing)["quasi_lattice_ok"] is None


def test_characterization_reports_long_cycles(monkeypatch):
    monkeypatch.setattr(structures.intreeval, "minimal_cycle_lengths", lambda ii, s: [3])
    report = characterization_check(I3)
    assert not report.success
    assert not report.discrepancies
    assert all(v["short_cycles_ok"] is False for v in report.property_failures)
    assert len(report.property_failures) == 3


def test_characterization_budget():
    path = increasing_path(7)
    with pytest.raises(BudgetExceededError):
        characterization_check(path)
    report = characterization_check(path, sample=5, seed=1, time_budget=-1.0)
    assert report.sampled
    assert not report.complete
    assert report.checked == 0
