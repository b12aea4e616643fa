"""
Полудистрибутивность, канонические представления и отображения κ.

Полудистрибутивность проверяется через покрытия: для x ⋖ y множество
{z : x ∨ z = y} должно иметь единственный минимальный элемент k∨(x, y).
Условие через тройки элементов служит перекрёстной проверкой.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Hashable, Optional

from config import get_config
from errors import NotALatticeError, SemidistributivityError, SizeGuardError
from graphs.digraph import members
from posets.poset import FinitePoset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JoinRepresentation:
    """Представление элемента объединением антицепи"""
    element: Hashable
    parts: FrozenSet[Hashable]


def _require_lattice(p: FinitePoset):
    pair = p.lattice_counterexample()
    if pair is not None:
        raise NotALatticeError(f"Нужна решётка, пара без границы: {pair!r}", pair)


def _k_join(p: FinitePoset, x: int, y: int) -> Optional[int]:
    """Единственный минимальный z с x ∨ z = y, иначе None"""
    candidates = 0
    for z in members(p.down[y]):
        if p.join_index(x, z) == y:
            candidates |= 1 << z
    minimal = [z for z in members(candidates) if p.down[z] & candidates == 1 << z]
    return minimal[0] if len(minimal) == 1 else None


def _k_meet(p: FinitePoset, x: int, y: int) -> Optional[int]:
    """Единственный максимальный z с y ∧ z = x, иначе None"""
    candidates = 0
    for z in members(p.up[x]):
        if p.meet_index(y, z) == x:
            candidates |= 1 << z
    maximal = [z for z in members(candidates) if p.up[z] & candidates == 1 << z]
    return maximal[0] if len(maximal) == 1 else None


def is_join_semidistributive(p: FinitePoset) -> bool:
    _require_lattice(p)
    return all(_k_join(p, x, y) is not None for x, y in p.covers)


def is_meet_semidistributive(p: FinitePoset) -> bool:
    _require_lattice(p)
    return all(_k_meet(p, x, y) is not None for x, y in p.covers)


def is_semidistributive(p: FinitePoset) -> bool:
    return is_join_semidistributive(p) and is_meet_semidistributive(p)


def join_semidistributive_by_triples(p: FinitePoset) -> bool:
    """x ∨ y = x ∨ z влечёт x ∨ (y ∧ z) = x ∨ y"""
    _require_lattice(p)
    size = len(p)
    for x in range(size):
        for y in range(size):
            xy = p.join_index(x, y)
            for z in range(y + 1, size):
                if p.join_index(x, z) == xy and p.join_index(x, p.meet_index(y, z)) != xy:
                    return False
    return True


def meet_semidistributive_by_triples(p: FinitePoset) -> bool:
    """x ∧ y = x ∧ z влечёт x ∧ (y ∨ z) = x ∧ y"""
    _require_lattice(p)
    size = len(p)
    for x in range(size):
        for y in range(size):
            xy = p.meet_index(x, y)
            for z in range(y + 1, size):
                if p.meet_index(x, z) == xy and p.meet_index(x, p.join_index(y, z)) != xy:
                    return False
    return True


def semidistributivity_conditions_agree(p: FinitePoset) -> bool:
    """Оба определения дают одинаковый ответ; перебор троек ограничен MAX_TRIPLE_CHECK"""
    bound = get_config().MAX_TRIPLE_CHECK
    if len(p) > bound:
        raise SizeGuardError("решётка для проверки по тройкам", len(p), bound)
    return (is_join_semidistributive(p) == join_semidistributive_by_triples(p)
            and is_meet_semidistributive(p) == meet_semidistributive_by_triples(p))


def canonical_join_representation(p: FinitePoset, x: Hashable) -> JoinRepresentation:
    """CJR(x) = {k∨(w, x) : w ⋖ x}"""
    _require_lattice(p)
    target = p.index[x]
    parts = set()
    for w in p.lower_covers[target]:
        k = _k_join(p, w, target)
        if k is None:
            raise SemidistributivityError(f"Нет k∨ для покрытия {p.elements[w]!r} ⋖ {x!r}")
        parts.add(p.elements[k])
    return JoinRepresentation(x, frozenset(parts))


def canonical_meet_representation(p: FinitePoset, x: Hashable) -> JoinRepresentation:
    _require_lattice(p)
    target = p.index[x]
    parts = set()
    for w in p.upper_covers[target]:
        k = _k_meet(p, target, w)
        if k is None:
            raise SemidistributivityError(f"Нет k∧ для покрытия {x!r} ⋖ {p.elements[w]!r}")
        parts.add(p.elements[k])
    return JoinRepresentation(x, frozenset(parts))


def kappa_join(p: FinitePoset, m: Hashable) -> Hashable:
    """κ∨(m) = k∨(m, m^⋆) для неразложимого в пересечение m"""
    _require_lattice(p)
    i = p.index[m]
    k = _k_join(p, i, p.index[p.upper_cover(m)])
    if k is None:
        raise SemidistributivityError(f"κ∨ не определено для {m!r}")
    return p.elements[k]


def kappa_meet(p: FinitePoset, j: Hashable) -> Hashable:
    """κ∧(j) = k∧(j_⋆, j) для неразложимого в объединение j"""
    _require_lattice(p)
    i = p.index[j]
    k = _k_meet(p, p.index[p.lower_cover(j)], i)
    if k is None:
        raise SemidistributivityError(f"κ∧ не определено для {j!r}")
    return p.elements[k]


def lattice_axioms_hold(p: FinitePoset) -> bool:
    """Коммутативность, ассоциативность, идемпотентность и поглощение"""
    _require_lattice(p)
    size = len(p)
    meet, join = p.meet_index, p.join_index
    for x in range(size):
        if meet(x, x) != x or join(x, x) != x:
            return False
        for y in range(size):
            if meet(x, y) != meet(y, x) or join(x, y) != join(y, x):
                return False
            if meet(x, join(x, y)) != x or join(x, meet(x, y)) != x:
                return False
            for z in range(size):
                if meet(meet(x, y), z) != meet(x, meet(y, z)):
                    return False
                if join(join(x, y), z) != join(x, join(y, z)):
                    return False
    return True
