#!/usr/bin/env python3
"""
Тесты графов, деревьев и каталога фикстур
"""

import pytest

from errors import NotATreeError, OrnamentError
from graphs.digraph import (Digraph, classify_tree, five_vertex_configuration, has_induced_alternating_cycle,
                            is_increasing, is_tree, mask_of, members, path_hypergraph, relabel_increasing,
                            transitive_closure, tree_interval, tree_leq, tree_order)
from graphs.fixtures import (broom, comb, comb_minus_bottom, diamond, fixture, fixture_names, graph_r,
                             increasing_path, star_tree_x)
from graphs.trees import directed_trees, increasing_trees


def hyperedges(*sets):
    return {frozenset(s) for s in sets}


def test_masks():
    assert mask_of([1, 3]) == 0b1010
    assert members(0b1010) == [1, 3]
    assert members(0) == []


def test_digraph_rejects_bad_edges():
    with pytest.raises(OrnamentError):
        Digraph(3, frozenset({(1, 1)}))
    with pytest.raises(OrnamentError):
        Digraph(2, frozenset({(1, 3)}))


def test_digraph_roundtrip_dict():
    d = diamond()
    assert d.to_dict() == {"n": 4, "edges": [[1, 2], [1, 3], [2, 4], [3, 4]]}
    assert Digraph.from_dict(d.to_dict()) == d


def test_transitive_closure_of_path():
    closure = transitive_closure(increasing_path(4))
    assert closure.edges == {(u, v) for u in range(1, 5) for v in range(u + 1, 5)}


def test_reachability_masks():
    d = diamond()
    assert members(d.descendant_masks[1]) == [2, 3, 4]
    assert members(d.ancestor_masks[4]) == [1, 2, 3]
    assert d.reaches(2, 4)
    assert not d.reaches(2, 3)


@pytest.mark.parametrize("graph, expected", [
    (increasing_path(3), hyperedges({1, 2}, {2, 3}, {1, 2, 3})),
    (diamond(), hyperedges({1, 2}, {1, 3}, {2, 4}, {3, 4}, {1, 2, 4}, {1, 3, 4})),
    (graph_r(), hyperedges({1, 3}, {1, 3, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4})),
])
def test_path_hypergraph(graph, expected):
    assert set(path_hypergraph(graph).hyperedges) == expected


def test_classify_tree():
    starred = classify_tree(star_tree_x())
    assert starred.starred
    assert starred.witness == (3, 3)
    assert not classify_tree(increasing_path(4)).starred
    assert not classify_tree(broom(3, 1)).starred
    with pytest.raises(NotATreeError):
        classify_tree(diamond())


def test_five_vertex_configuration():
    assert five_vertex_configuration(star_tree_x()) == (1, 2, 3, 4, 5)
    assert five_vertex_configuration(comb(2)) is None


def test_alternating_cycle_only_for_starred():
    assert has_induced_alternating_cycle(transitive_closure(star_tree_x())) is not None
    assert has_induced_alternating_cycle(transitive_closure(increasing_path(4))) is None


def test_tree_order_and_interval():
    x = star_tree_x()
    assert tree_leq(x, 1, 4)
    assert not tree_leq(x, 1, 2)
    assert members(tree_interval(x, 1, 4)) == [1, 3, 4]
    assert tree_interval(x, 4, 5) == 0
    assert tree_order(x, 1, 5).path == (1, 3, 5)
    assert tree_order(x, 4, 5).relation == "incomparable"


def test_directed_tree_counts():
    assert [len(directed_trees(n)) for n in range(1, 6)] == [1, 1, 3, 8, 27]


def test_directed_trees_are_increasing_trees():
    for t in directed_trees(5):
        assert is_tree(t)
        assert is_increasing(t)


def test_increasing_trees_on_three_vertices():
    found = {t.edges for t in increasing_trees(3)}
    assert found == {
        frozenset({(1, 2), (2, 3)}),
        frozenset({(1, 2), (1, 3)}),
        frozenset({(1, 3), (2, 3)}),
    }


def test_relabel_increasing():
    d = Digraph(3, frozenset({(3, 2), (2, 1)}))
    assert relabel_increasing(d).edges == {(1, 2), (2, 3)}


def test_fixture_families():
    assert broom(2, 1).edges == {(1, 3), (2, 3)}
    assert broom(1, 3).edges == {(1, 2), (2, 3), (3, 4)}
    assert comb(2).edges == {(1, 2), (2, 4), (3, 4)}
    assert comb_minus_bottom(2).edges == {(1, 3), (2, 3)}


def test_fixture_catalog():
    assert {"X", "D", "R", "C5"} <= set(fixture_names())
    assert fixture("X") == star_tree_x()
    with pytest.raises(KeyError):
        fixture("nope")
