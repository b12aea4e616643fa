#!/usr/bin/env python3
"""
Тесты переориентаций транзитивного замыкания
"""

import pytest

from errors import AmbientMismatchError, NotALatticeError, NotATreeError, OrnamentError, StarredTreeError
from graphs.digraph import Digraph, transitive_closure
from graphs.fixtures import broom, diamond, increasing_path, star_tree_x
from posets.isomorphism import poset_isomorphic
from structures.ornament import maximal_ornamentation, minimal_ornamentation
from structures.reorient import (Reorientation, acyclic_reorientations, all_reorientations, areori_is_lattice,
                                 areori_join, areori_poset, areori_meet, areori_of_permutation, closed_reorientations,
                                 coclosed_image, cyclic_biclosed_witness, fiber, fiber_extrema,
                                 forest_criterion_witness,
                                 is_acyclic_reorientation, is_transitively_biclosed, is_transitively_closed,
                                 is_transitively_coclosed, linear_extensions, orn_of_reorientation, orn_tree_edgewise,
                                 quotient_check_unstarred, rbi_join_tree, rbi_poset, rcl_poset, rco_poset,
                                 reori_of_ornamentation, reorientation_cycle)

TC_I3 = transitive_closure(increasing_path(3))


def reorientation(*rev) -> Reorientation:
    return Reorientation(TC_I3, frozenset(rev))


def test_reorientation_rejects_foreign_edges():
    with pytest.raises(OrnamentError):
        Reorientation(TC_I3, frozenset({(1, 4)}))


def test_oriented_edges():
    assert reorientation((1, 3)).oriented_edges == [(1, 2), (3, 1), (2, 3)]


def test_reorientation_counts():
    assert len(all_reorientations(TC_I3)) == 8
    assert len(acyclic_reorientations(increasing_path(3))) == 6
    assert len(rbi_poset(TC_I3)) == 6
    assert len(rcl_poset(TC_I3)) == 7
    assert len(rco_poset(TC_I3)) == 7


def test_cycle_detection():
    cyclic = reorientation((1, 3))
    assert not is_acyclic_reorientation(cyclic)
    assert sorted(reorientation_cycle(cyclic)) == [1, 2, 3]
    assert reorientation_cycle(reorientation((1, 2))) is None


def test_closure_properties():
    assert not is_transitively_closed(reorientation((1, 2), (2, 3)))
    assert is_transitively_closed(reorientation((1, 2), (2, 3), (1, 3)))
    assert is_transitively_closed(reorientation((1, 3)))
    assert not is_transitively_coclosed(reorientation((1, 3)))
    assert is_transitively_biclosed(reorientation((1, 2), (1, 3)))


def test_closed_reorientations_need_increasing_ambient():
    with pytest.raises(OrnamentError):
        closed_reorientations(Digraph(2, frozenset({(2, 1)})))


def test_biclosed_are_acyclic_on_unstarred_tree():
    closure = transitive_closure(increasing_path(4))
    for r in closed_reorientations(closure, closed=True, coclosed=True):
        assert is_acyclic_reorientation(r)


def test_permutation_and_linear_extensions():
    assert areori_of_permutation(TC_I3, (2, 1, 3)).rev == {(1, 2)}
    assert areori_of_permutation(TC_I3, (3, 2, 1)).rev == TC_I3.edges
    assert linear_extensions(reorientation()) == [(1, 2, 3)]
    assert linear_extensions(reorientation((1, 2))) == [(2, 1, 3)]
    with pytest.raises(OrnamentError):
        areori_of_permutation(TC_I3, (1, 1, 2))


def test_orn_of_extreme_reorientations():
    i3 = increasing_path(3)
    assert orn_of_reorientation(i3, reorientation()) == minimal_ornamentation(i3)
    assert orn_of_reorientation(i3, reorientation((1, 2), (1, 3), (2, 3))) == maximal_ornamentation(i3)
    assert reori_of_ornamentation(i3, maximal_ornamentation(i3)).rev == TC_I3.edges
    with pytest.raises(AmbientMismatchError):
        orn_of_reorientation(increasing_path(4), reorientation())


def test_areori_join_and_meet():
    assert areori_join(reorientation((1, 2)), reorientation((2, 3))).rev == TC_I3.edges
    assert areori_meet(reorientation((1, 2), (1, 3)), reorientation((1, 3), (2, 3))).rev == frozenset()


def test_rbi_join_on_tree():
    joined = rbi_join_tree(reorientation((1, 2)), reorientation((2, 3)))
    assert joined.rev == TC_I3.edges


def test_forest_criterion():
    assert areori_is_lattice(TC_I3)
    closure_x = transitive_closure(star_tree_x())
    assert sorted(forest_criterion_witness(closure_x)) == [1, 2, 4, 5]
    assert not areori_is_lattice(closure_x)
    with pytest.raises(NotALatticeError):
        areori_join(Reorientation(closure_x, frozenset()), Reorientation(closure_x, frozenset()))


def test_cyclic_biclosed_witness():
    assert cyclic_biclosed_witness(increasing_path(4)) is None
    witness = cyclic_biclosed_witness(star_tree_x())
    assert witness.rev == {(1, 4), (3, 4), (2, 5), (3, 5)}
    assert is_transitively_biclosed(witness)
    assert not is_acyclic_reorientation(witness)


def test_fiber_of_minimal_ornamentation():
    i3 = increasing_path(3)
    extrema = fiber_extrema(i3, minimal_ornamentation(i3))
    assert extrema.minima == [reorientation()]
    assert all(orn_of_reorientation(i3, r) == minimal_ornamentation(i3) for r in fiber(i3, minimal_ornamentation(i3)))


@pytest.mark.parametrize("tree", [increasing_path(3), star_tree_x(), broom(2, 1)])
def test_tree_edgewise_description(tree):
    for r in acyclic_reorientations(tree):
        assert orn_tree_edgewise(tree, r) == orn_of_reorientation(tree, r)


def test_coclosed_image_covers_tree_ornamentations():
    image, covers = coclosed_image(increasing_path(3))
    assert len(image) == 5
    assert covers
    assert coclosed_image(star_tree_x())[1]


def test_quotient_check_unstarred():
    report = quotient_check_unstarred(increasing_path(3))
    assert report.pairs_checked == 15
    assert report.image_size == 5
    assert report.success
    with pytest.raises(StarredTreeError):
        quotient_check_unstarred(star_tree_x())
    with pytest.raises(NotATreeError):
        quotient_check_unstarred(diamond())


def test_biclosed_reorientations_of_path_form_weak_order():
    closure = transitive_closure(increasing_path(4))
    biclosed = rbi_poset(closure)
    assert len(biclosed) == 24
    assert poset_isomorphic(biclosed, areori_poset(closure))
