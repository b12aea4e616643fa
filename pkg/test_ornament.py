#!/usr/bin/env python3
"""
Тесты орнаментаций и решётки Orn
"""

from itertools import combinations

import pytest

from errors import NotAPathError, OrnamentError
from graphs.digraph import classify_tree, mask_of
from graphs.fixtures import broom, diamond, increasing_path, star_tree_x
from graphs.trees import directed_trees
from posets.lattice import is_join_semidistributive, is_meet_semidistributive, is_semidistributive
from structures.ornament import (acyclic_ornamentations, cover_relations, cyclic_ornamentation_witness,
                                 enumerate_ornamentations, is_acyclic_ornamentation, is_ornament, jp,
                                 make_ornamentation, maximal_ornamentation, minimal_ornamentation, mp, orn_join,
                                 orn_meet, orn_meet_by_intersection, orn_poset, ornaments_at, tree_paths)


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42)])
def test_path_ornamentations_are_catalan(n, expected):
    assert len(enumerate_ornamentations(increasing_path(n))) == expected


def test_ornaments_at_vertex():
    assert ornaments_at(increasing_path(3), 3) == {frozenset({3}), frozenset({2, 3}), frozenset({1, 2, 3})}
    assert ornaments_at(diamond(), 4) == {
        frozenset({4}), frozenset({2, 4}), frozenset({3, 4}), frozenset({2, 3, 4}),
        frozenset({1, 2, 4}), frozenset({1, 3, 4}), frozenset({1, 2, 3, 4}),
    }


def test_is_ornament():
    i3 = increasing_path(3)
    assert is_ornament(i3, 3, mask_of([2, 3]))
    assert not is_ornament(i3, 3, mask_of([1, 3]))
    assert not is_ornament(i3, 3, mask_of([1, 2]))


def test_make_ornamentation_validates():
    i3 = increasing_path(3)
    with pytest.raises(OrnamentError):
        make_ornamentation(i3, [mask_of([1]), mask_of([2]), mask_of([1, 3])])
    # O(3) содержит 2, но не содержит O(2)
    with pytest.raises(OrnamentError):
        make_ornamentation(i3, [mask_of([1]), mask_of([1, 2]), mask_of([2, 3])])


def test_ornamentation_roundtrip_dict():
    o = maximal_ornamentation(increasing_path(3))
    assert o.to_dict() == {"n": 3, "O": {"1": [1], "2": [1, 2], "3": [1, 2, 3]}}
    assert type(o).from_dict(o.graph, o.to_dict()) == o


def test_extremes_of_orn():
    i3 = increasing_path(3)
    p = orn_poset(i3)
    assert p.elements[p.bottom_index()] == minimal_ornamentation(i3)
    assert p.elements[p.top_index()] == maximal_ornamentation(i3)


def test_cover_relations_match_hasse_diagram():
    i3 = increasing_path(3)
    assert len(cover_relations(i3)) == len(orn_poset(i3).covers) == 5


def test_cover_relations_on_diamond():
    d = diamond()
    p = orn_poset(d)
    found = {(c.lower, c.upper) for c in cover_relations(d)}
    assert found == {(p.elements[i], p.elements[j]) for i, j in p.covers}


@pytest.mark.parametrize("graph", [increasing_path(3), star_tree_x(), diamond()])
def test_meet_and_join_formulas(graph):
    p = orn_poset(graph)
    assert p.is_lattice()
    for o1, o2 in combinations(p.elements, 2):
        assert orn_meet(graph, o1, o2) == p.meet(o1, o2)
        assert orn_join(graph, o1, o2) == p.join(o1, o2)


def test_meet_is_intersection_on_trees():
    t = broom(2, 2)
    p = orn_poset(t)
    for o1, o2 in combinations(p.elements, 2):
        assert orn_meet_by_intersection(t, o1, o2) == orn_meet(t, o1, o2)


def test_orn_semidistributive_for_trees_only():
    assert is_semidistributive(orn_poset(star_tree_x()))
    assert is_semidistributive(orn_poset(increasing_path(4)))
    diamond_lattice = orn_poset(diamond())
    assert not is_join_semidistributive(diamond_lattice)
    assert not is_meet_semidistributive(diamond_lattice)


def test_tree_paths():
    assert tree_paths(increasing_path(3)) == [(1, 2), (1, 2, 3), (2, 3)]


def test_jp_and_mp():
    i3 = increasing_path(3)
    assert jp(i3, (1, 2)).masks == (mask_of([1]), mask_of([1, 2]), mask_of([3]))
    assert mp(i3, (1, 2)).masks == (mask_of([1]), mask_of([2]), mask_of([1, 2, 3]))
    with pytest.raises(NotAPathError):
        jp(i3, (1, 3))
    with pytest.raises(NotAPathError):
        mp(i3, (2,))


def test_irreducibles_are_jp_and_mp():
    x = star_tree_x()
    p = orn_poset(x)
    paths = tree_paths(x)
    assert p.join_irreducibles() == {jp(x, path) for path in paths}
    assert p.meet_irreducibles() == {mp(x, path) for path in paths}


def test_cyclic_ornamentation_only_for_starred_trees():
    assert cyclic_ornamentation_witness(increasing_path(4)) is None
    witness = cyclic_ornamentation_witness(star_tree_x())
    assert witness is not None
    assert witness(4) == {1, 3, 4}
    assert witness(5) == {2, 3, 5}
    assert not is_acyclic_ornamentation(star_tree_x(), witness)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_acyclic_ornamentations_by_permutations(n):
    """Перебор перестановок: AOrn = Orn ровно для деревьев без звезды"""
    for tree in directed_trees(n):
        by_permutations = {o.masks for o in acyclic_ornamentations(tree, brute_force=True)}
        everything = {o.masks for o in enumerate_ornamentations(tree)}
        if classify_tree(tree).starred:
            assert by_permutations < everything
        else:
            assert by_permutations == everything
        assert {o.masks for o in acyclic_ornamentations(tree)} == by_permutations
