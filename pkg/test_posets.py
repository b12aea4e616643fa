#!/usr/bin/env python3
"""
Тесты частичных порядков, решёток и пополнения Макнейла
"""

import pytest

from errors import NotALatticeError, NonUniqueCoverError, RelationError, SizeGuardError
from config import get_config
from posets.completion import irreducible_core, macneille_completion
from posets.export import poset_to_dict, poset_to_dot
from posets.isomorphism import poset_isomorphic
from posets.lattice import (canonical_join_representation, canonical_meet_representation, is_join_semidistributive,
                            is_meet_semidistributive, is_semidistributive, kappa_join, kappa_meet,
                            lattice_axioms_hold, semidistributivity_conditions_agree)
from posets.poset import FinitePoset, antichain, boolean_lattice, chain, poset_from_relation


def diamond_m3() -> FinitePoset:
    order = {("0", x) for x in "0abc1"} | {(x, "1") for x in "0abc1"} | {(x, x) for x in "abc"}
    return poset_from_relation(["0", "a", "b", "c", "1"], lambda x, y: (x, y) in order)


def pentagon_n5() -> FinitePoset:
    # 0 < a < b < 1, 0 < c < 1
    below = {"0": "0", "a": "0a", "b": "0ab", "c": "0c", "1": "0abc1"}
    return poset_from_relation(list(below), lambda x, y: x in below[y])


def test_relation_errors():
    with pytest.raises(RelationError, match="reflexivity"):
        FinitePoset(["a", "b"], [0b00, 0b10])
    with pytest.raises(RelationError, match="antisymmetry"):
        FinitePoset(["a", "b"], [0b11, 0b11])


def test_chain_basics():
    c = chain(3)
    assert c.covers == ((0, 1), (1, 2))
    assert c.heights == (0, 1, 2)
    assert c.bottom_index() == 0
    assert c.top_index() == 2
    assert c.is_lattice()
    assert c.join(0, 2) == 2
    assert c.meet(1, 2) == 1


def test_antichain_is_not_lattice():
    p = antichain(2)
    assert p.lattice_counterexample() == (0, 1)
    with pytest.raises(NotALatticeError):
        p.require_lattice()


def test_empty_poset_is_not_lattice():
    assert FinitePoset([], []).lattice_counterexample() == ()


def test_lattice_size_guard(monkeypatch):
    monkeypatch.setenv("ORNAMENT_MAX_LATTICE_SIZE", "3")
    get_config.cache_clear()
    try:
        with pytest.raises(SizeGuardError):
            boolean_lattice(2).is_lattice()
    finally:
        monkeypatch.delenv("ORNAMENT_MAX_LATTICE_SIZE")
        get_config.cache_clear()


def test_irreducibles_of_boolean_lattice():
    b2 = boolean_lattice(2)
    assert b2.join_irreducibles() == {frozenset({0}), frozenset({1})}
    assert b2.meet_irreducibles() == {frozenset({0}), frozenset({1})}
    assert b2.lower_cover(frozenset({0})) == frozenset()
    with pytest.raises(NonUniqueCoverError):
        b2.lower_cover(frozenset({0, 1}))


def test_subposet():
    sub = boolean_lattice(2).subposet([frozenset(), frozenset({0}), frozenset({0, 1})])
    assert len(sub) == 3
    assert sub.covers == ((0, 1), (1, 2))


@pytest.mark.parametrize("lattice", [chain(4), boolean_lattice(3), pentagon_n5()])
def test_semidistributive_lattices(lattice):
    assert is_semidistributive(lattice)
    assert semidistributivity_conditions_agree(lattice)
    assert lattice_axioms_hold(lattice)


def test_m3_is_not_semidistributive():
    m3 = diamond_m3()
    assert m3.is_lattice()
    assert not is_join_semidistributive(m3)
    assert not is_meet_semidistributive(m3)
    assert semidistributivity_conditions_agree(m3)


def test_semidistributivity_requires_lattice():
    with pytest.raises(NotALatticeError):
        is_join_semidistributive(antichain(2))


def test_canonical_representations():
    b2 = boolean_lattice(2)
    top = frozenset({0, 1})
    assert canonical_join_representation(b2, top).parts == {frozenset({0}), frozenset({1})}
    assert canonical_meet_representation(b2, frozenset()).parts == {frozenset({0}), frozenset({1})}


def test_kappa_maps_on_boolean_lattice():
    b2 = boolean_lattice(2)
    assert kappa_join(b2, frozenset({0})) == frozenset({1})
    assert kappa_meet(b2, frozenset({1})) == frozenset({0})


def test_kappa_is_bijection_on_pentagon():
    n5 = pentagon_n5()
    images = {kappa_join(n5, m) for m in n5.meet_irreducibles()}
    assert images == n5.join_irreducibles()
    for j in n5.join_irreducibles():
        assert kappa_join(n5, kappa_meet(n5, j)) == j


def test_macneille_completion_sizes():
    completion, embedding = macneille_completion(antichain(2))
    assert len(completion) == 4
    assert completion.is_lattice()
    assert embedding[0] == frozenset({0})
    completion, _ = macneille_completion(chain(3))
    assert len(completion) == 3


def test_completion_of_lattice_is_isomorphic():
    n5 = pentagon_n5()
    completion, _ = macneille_completion(n5)
    assert poset_isomorphic(completion, n5)


@pytest.mark.parametrize("lattice, core_size", [(boolean_lattice(3), 6), (pentagon_n5(), 3)])
def test_lattice_is_completion_of_its_irreducibles(lattice, core_size):
    core = irreducible_core(lattice)
    assert len(core) == core_size
    completion, _ = macneille_completion(core)
    assert poset_isomorphic(completion, lattice)


def test_triple_check_size_guard(monkeypatch):
    monkeypatch.setenv("ORNAMENT_MAX_TRIPLE_CHECK", "3")
    get_config.cache_clear()
    try:
        with pytest.raises(SizeGuardError):
            semidistributivity_conditions_agree(chain(4))
    finally:
        monkeypatch.delenv("ORNAMENT_MAX_TRIPLE_CHECK")
        get_config.cache_clear()


def test_isomorphism():
    assert poset_isomorphic(chain(3), poset_from_relation("xyz", lambda a, b: a <= b))
    assert not poset_isomorphic(boolean_lattice(2), chain(4))
    assert not poset_isomorphic(diamond_m3(), pentagon_n5())
    result = poset_isomorphic(chain(2), chain(2))
    assert result.mapping == {0: 0, 1: 1}


def test_export():
    assert "n0 -> n1;" in poset_to_dot(chain(2))
    assert poset_to_dict(chain(2)) == {"elements": ["0", "1"], "covers": [[0, 1]]}
