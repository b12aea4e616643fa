#!/usr/bin/env python3
"""
Тесты источников гиперграфов и решётки ASour
"""

import pytest

from errors import AcyclicityRequiredError, AmbientMismatchError, OrnamentError, SizeGuardError
from graphs.digraph import Digraph, Hypergraph, path_hypergraph, transitive_closure
from graphs.fixtures import diamond, graph_r, increasing_path, star_tree_x
from posets.isomorphism import poset_isomorphic
from structures.ornament import maximal_ornamentation, minimal_ornamentation, orn_poset
from structures.reorient import Reorientation, areori_of_permutation
from structures.sourcing import (Sourcing, acyclic_sourcings, acyclicity_formulations_agree, areori_of_sourcing,
                                 arr, asour_aorn_isomorphism_check, asour_of_permutation, asour_of_reorientation,
                                 asour_poset, enumerate_sourcings, is_acyclic_sourcing, is_transitive_rev,
                                 make_sourcing, max_sourcing, min_sourcing, orn_of_sourcing, rev_of_sourcing,
                                 sour_of_ornamentation, sourcing_count, sourcing_cycle)

I3 = increasing_path(3)
P_I3 = path_hypergraph(I3)


def test_sourcing_validates_sources():
    with pytest.raises(OrnamentError):
        Sourcing(P_I3, (1, 1, 1))
    with pytest.raises(OrnamentError):
        Sourcing(P_I3, (1, 2))


def test_make_sourcing_and_call():
    s = make_sourcing(P_I3, {(1, 2): 2, (2, 3): 3, (1, 2, 3): 1})
    assert s.sources == (2, 1, 3)
    assert s({1, 2, 3}) == 1


def test_sourcing_roundtrip_dict():
    s = max_sourcing(P_I3)
    assert s.to_dict() == {"n": 3, "hyperedges": [[1, 2], [1, 2, 3], [2, 3]], "sources": [2, 3, 3]}
    assert Sourcing.from_dict(s.to_dict()) == s


def test_sourcing_counts_for_path():
    assert sourcing_count(P_I3) == 12
    assert len(enumerate_sourcings(P_I3)) == 12
    assert len(acyclic_sourcings(P_I3)) == 5
    with pytest.raises(SizeGuardError):
        enumerate_sourcings(P_I3, limit=11)


def test_enumeration_methods_agree():
    for graph in (I3, star_tree_x(), diamond()):
        h = path_hypergraph(graph)
        assert acyclic_sourcings(h, "filter") == acyclic_sourcings(h, "permutations")
    with pytest.raises(OrnamentError):
        acyclic_sourcings(P_I3, "guess")


def test_sourcing_cycle():
    cyclic = Sourcing(P_I3, (2, 1, 3))
    assert not is_acyclic_sourcing(cyclic)
    assert acyclicity_formulations_agree(cyclic)
    assert sourcing_cycle(cyclic) == [frozenset({1, 2}), frozenset({1, 2, 3})]
    assert sourcing_cycle(min_sourcing(P_I3)) is None


def test_asour_of_permutation():
    assert asour_of_permutation(P_I3, (1, 2, 3)) == min_sourcing(P_I3)
    assert asour_of_permutation(P_I3, (3, 2, 1)) == max_sourcing(P_I3)


def test_asour_of_path_is_tamari():
    assert poset_isomorphic(asour_poset(P_I3), orn_poset(I3))


def test_rev_and_orn_of_sourcing():
    assert rev_of_sourcing(I3, max_sourcing(P_I3)) == {(1, 2), (1, 3), (2, 3)}
    assert rev_of_sourcing(I3, min_sourcing(P_I3)) == frozenset()
    assert orn_of_sourcing(I3, max_sourcing(P_I3)) == maximal_ornamentation(I3)
    with pytest.raises(AmbientMismatchError):
        rev_of_sourcing(increasing_path(4), max_sourcing(P_I3))


def test_rev_of_sourcing_needs_increasing_graph():
    backwards = Digraph(2, frozenset({(2, 1)}))
    with pytest.raises(OrnamentError):
        rev_of_sourcing(backwards, min_sourcing(path_hypergraph(backwards)))


@pytest.mark.parametrize("d", [I3, star_tree_x(), diamond()])
def test_rev_of_acyclic_sourcing_is_transitive(d):
    assert all(is_transitive_rev(d, s) for s in acyclic_sourcings(path_hypergraph(d)))


def test_sour_of_extreme_ornamentations():
    assert sour_of_ornamentation(I3, minimal_ornamentation(I3)) == min_sourcing(P_I3)
    assert sour_of_ornamentation(I3, maximal_ornamentation(I3)) == max_sourcing(P_I3)


def test_asour_of_reorientation():
    closure = transitive_closure(I3)
    reversed_all = Reorientation(closure, closure.edges)
    assert asour_of_reorientation(I3, reversed_all) == max_sourcing(P_I3)
    with pytest.raises(AcyclicityRequiredError):
        asour_of_reorientation(I3, Reorientation(closure, frozenset({(1, 3)})))


def test_asour_follows_permutations():
    closure = transitive_closure(I3)
    for perm in ((1, 2, 3), (2, 1, 3), (2, 3, 1), (3, 1, 2)):
        r = areori_of_permutation(closure, perm)
        assert asour_of_reorientation(I3, r) == asour_of_permutation(P_I3, perm)


def test_arr_and_areori_of_sourcing():
    s = max_sourcing(P_I3)
    assert arr(s) == {(1, 2), (1, 3), (2, 3)}
    assert areori_of_sourcing(I3, s).rev == transitive_closure(I3).edges
    with pytest.raises(AcyclicityRequiredError):
        areori_of_sourcing(I3, Sourcing(P_I3, (2, 1, 3)))


@pytest.mark.parametrize("graph", [I3, star_tree_x(), diamond(), graph_r()])
def test_asour_isomorphic_to_aorn(graph):
    assert asour_aorn_isomorphism_check(graph).success


def test_hypergraph_validation():
    with pytest.raises(OrnamentError):
        Hypergraph(3, (frozenset({1}),))
    with pytest.raises(OrnamentError):
        Hypergraph(3, (frozenset({1, 2}), frozenset({2, 1})))
