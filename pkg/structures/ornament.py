"""
Орнаменты и орнаментации ориентированного графа, решётка Orn(D),
ацикличные орнаментации, покрытия и неразложимые орнаментации J_P, M_P.

Орнамент в v - множество U ∋ v, из каждой вершины которого есть путь
в v внутри U. Орнаментация сопоставляет каждой вершине орнамент так, что
u ∈ O(v) влечёт O(u) ⊆ O(v).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Any, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from config import get_config
from errors import AmbientMismatchError, NotAPathError, OrnamentError, SizeGuardError
from graphs.digraph import (Digraph, classify_tree, five_vertex_configuration, is_tree, mask_of, members,
                            tree_interval)
from posets.poset import FinitePoset, poset_from_masks

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ornamentation:
    """Орнаментация: masks[v - 1] - битовая маска O(v)"""
    graph: Digraph
    masks: Tuple[int, ...]

    def __call__(self, v: int) -> FrozenSet[int]:
        return frozenset(members(self.masks[v - 1]))

    def mask(self, v: int) -> int:
        return self.masks[v - 1]

    def __repr__(self) -> str:
        parts = []
        for v in self.graph.vertices:
            inner = ",".join(str(u) for u in members(self.masks[v - 1]))
            parts.append(f"{v}:{{{inner}}}")
        return "O(" + " ".join(parts) + ")"

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.graph.n,
                "O": {str(v): members(self.masks[v - 1]) for v in self.graph.vertices}}

    @classmethod
    def from_dict(cls, graph: Digraph, data: Dict[str, Any]) -> 'Ornamentation':
        masks = tuple(mask_of(data["O"][str(v)]) for v in graph.vertices)
        return make_ornamentation(graph, masks)


@dataclass(frozen=True)
class CoverRelation:
    lower: Ornamentation
    upper: Ornamentation
    witness: Tuple[int, int]


def _require_same(d: Digraph, *ornamentations: Ornamentation):
    for o in ornamentations:
        if o.graph != d:
            raise AmbientMismatchError("Орнаментация задана на другом графе")


def max_ornament_within(d: Digraph, v: int, allowed: int) -> int:
    """Наибольший орнамент в v внутри allowed: вершины, достигающие v внутри allowed"""
    allowed |= 1 << v
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for w in members(frontier):
            nxt |= d.in_masks[w]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_ornament(d: Digraph, v: int, mask: int) -> bool:
    return bool(mask >> v & 1) and max_ornament_within(d, v, mask) == mask


def is_ornamentation(d: Digraph, masks: Sequence[int]) -> bool:
    if len(masks) != d.n:
        return False
    for v in d.vertices:
        mask = masks[v - 1]
        if not is_ornament(d, v, mask):
            return False
        for u in members(mask):
            if masks[u - 1] & ~mask:
                return False
    return True


def make_ornamentation(d: Digraph, masks: Sequence[int]) -> Ornamentation:
    """Орнаментация с проверкой условий орнамента и вложенности"""
    masks = tuple(masks)
    if not is_ornamentation(d, masks):
        raise OrnamentError(f"Не орнаментация: {[members(m) for m in masks]}")
    return Ornamentation(d, masks)


@lru_cache(maxsize=1024)
def ornament_masks_at(d: Digraph, v: int) -> Tuple[int, ...]:
    """Все орнаменты в v: замыкание {v} добавлением входящих соседей"""
    start = 1 << v
    found = {start}
    stack = [start]
    while stack:
        mask = stack.pop()
        border = 0
        for w in members(mask):
            border |= d.in_masks[w]
        for u in members(border & ~mask):
            grown = mask | 1 << u
            if grown not in found:
                found.add(grown)
                stack.append(grown)
    return tuple(sorted(found, key=lambda m: (bin(m).count("1"), m)))


def ornaments_at(d: Digraph, v: int) -> Set[FrozenSet[int]]:
    return {frozenset(members(m)) for m in ornament_masks_at(d, v)}


def _vertex_order(d: Digraph) -> List[int]:
    graph = d.to_networkx()
    if nx.is_directed_acyclic_graph(graph):
        return list(nx.lexicographical_topological_sort(graph))
    return list(d.vertices)


@lru_cache(maxsize=256)
def _ornamentation_masks(d: Digraph, limit: int) -> Tuple[Tuple[int, ...], ...]:
    order = _vertex_order(d)
    choice = [0] * (d.n + 1)
    results: List[Tuple[int, ...]] = []

    def place(k: int):
        if k == len(order):
            results.append(tuple(choice[1:]))
            if len(results) > limit:
                raise SizeGuardError("число орнаментаций", len(results), limit)
            return
        v = order[k]
        decided = order[:k]
        for mask in ornament_masks_at(d, v):
            if any(choice[u] & ~mask for u in members(mask) if u in decided):
                continue
            if any(choice[w] >> v & 1 and mask & ~choice[w] for w in decided):
                continue
            choice[v] = mask
            place(k + 1)
        choice[v] = 0

    place(0)
    results.sort()
    return tuple(results)


def enumerate_ornamentations(d: Digraph, limit: Optional[int] = None) -> List[Ornamentation]:
    """
    Все орнаментации графа без повторов. Вершины обходятся в топологическом
    порядке; орнамент вершины выбирается согласованным с уже выбранными.
    """
    bound = limit if limit is not None else get_config().MAX_ORNAMENTATIONS
    return [Ornamentation(d, masks) for masks in _ornamentation_masks(d, bound)]


def minimal_ornamentation(d: Digraph) -> Ornamentation:
    return Ornamentation(d, tuple(1 << v for v in d.vertices))


def maximal_ornamentation(d: Digraph) -> Ornamentation:
    return Ornamentation(d, tuple(d.ancestor_masks[v] & d.full_mask | 1 << v for v in d.vertices))


def orn_leq(o1: Ornamentation, o2: Ornamentation) -> bool:
    return all(a & ~b == 0 for a, b in zip(o1.masks, o2.masks))


def orn_meet(d: Digraph, o1: Ornamentation, o2: Ornamentation) -> Ornamentation:
    """(O1 ∧ O2)(v) - наибольший орнамент в v внутри O1(v) ∩ O2(v)"""
    _require_same(d, o1, o2)
    return Ornamentation(d, tuple(max_ornament_within(d, v, o1.mask(v) & o2.mask(v)) for v in d.vertices))


def orn_join(d: Digraph, o1: Ornamentation, o2: Ornamentation) -> Ornamentation:
    """(O1 ∨ O2)(v) - наименьшее U ∋ v, замкнутое относительно u ↦ O1(u) ∪ O2(u)"""
    _require_same(d, o1, o2)
    masks = []
    for v in d.vertices:
        closed = 1 << v
        frontier = closed
        while frontier:
            grown = 0
            for u in members(frontier):
                grown |= o1.mask(u) | o2.mask(u)
            frontier = grown & ~closed
            closed |= frontier
        masks.append(closed)
    return Ornamentation(d, tuple(masks))


def orn_meet_by_intersection(d: Digraph, o1: Ornamentation, o2: Ornamentation) -> Ornamentation:
    """Для деревьев пересечение покомпонентно уже является орнаментацией"""
    _require_same(d, o1, o2)
    return Ornamentation(d, tuple(a & b for a, b in zip(o1.masks, o2.masks)))


def orn_poset(d: Digraph, limit: Optional[int] = None) -> FinitePoset:
    ornamentations = enumerate_ornamentations(d, limit)
    return poset_from_masks(ornamentations, [o.masks for o in ornamentations])


def cover_relations(d: Digraph, limit: Optional[int] = None) -> List[CoverRelation]:
    """
    Покрытия O1 ⋖ O2: O2 отличается от O1 только в v, где O2(v) = O1(u) ∪ O1(v)
    для u ∉ O1(v). Для графов, не являющихся деревьями, дополнительно
    O1(w) = O1(u) для всех w ∈ O1(u) с ребром в O1(v).
    """
    ornamentations = enumerate_ornamentations(d, limit)
    known = {o.masks for o in ornamentations}
    tree = is_tree(d)
    found: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Tuple[int, int]] = {}
    for o1 in ornamentations:
        for v in d.vertices:
            below = o1.mask(v)
            for u in d.vertices:
                if below >> u & 1:
                    continue
                grown = list(o1.masks)
                grown[v - 1] = o1.mask(u) | below
                grown = tuple(grown)
                if grown not in known:
                    continue
                if not tree and any(o1.mask(w) != o1.mask(u) for w in members(o1.mask(u))
                                    if d.out_masks[w] & below):
                    continue
                found.setdefault((o1.masks, grown), (u, v))
    return [CoverRelation(Ornamentation(d, low), Ornamentation(d, high), witness)
            for (low, high), witness in sorted(found.items())]


def _check_path(t: Digraph, path: Sequence[int]) -> Tuple[int, ...]:
    path = tuple(path)
    if len(path) < 2 or len(set(path)) != len(path):
        raise NotAPathError(f"{list(path)} не является путём хотя бы из двух вершин")
    for a, b in zip(path, path[1:]):
        if (a, b) not in t.edges:
            raise NotAPathError(f"Нет ребра ({a},{b}) на пути {list(path)}")
    return path


def jp(t: Digraph, path: Sequence[int]) -> Ornamentation:
    """J_P: O(v) = P для конца v пути P, одноэлементные множества в остальных вершинах"""
    path = _check_path(t, path)
    masks = [1 << w for w in t.vertices]
    masks[path[-1] - 1] = mask_of(path)
    return make_ornamentation(t, masks)


def mp(t: Digraph, path: Sequence[int]) -> Ornamentation:
    """M_P: O(w) = T≤w ∖ T≤u при u <_T w ≤_T v, иначе O(w) = T≤w"""
    path = _check_path(t, path)
    start = path[0]
    on_path = mask_of(path[1:])
    below_start = t.ancestor_masks[start] | 1 << start
    masks = []
    for w in t.vertices:
        down = t.ancestor_masks[w] | 1 << w
        masks.append(down & ~below_start if on_path >> w & 1 else down)
    return make_ornamentation(t, masks)


def _is_unstarred_tree(d: Digraph) -> bool:
    return is_tree(d) and not classify_tree(d).starred


@lru_cache(maxsize=128)
def _acyclic_masks(d: Digraph) -> FrozenSet[Tuple[int, ...]]:
    from structures.reorient import acyclic_reorientations, orn_of_reorientation

    return frozenset(orn_of_reorientation(d, r).masks for r in acyclic_reorientations(d))


def acyclic_ornamentations(d: Digraph, brute_force: bool = False) -> List[Ornamentation]:
    """
    Образ ацикличных переориентаций tc(D) при R ↦ orn{R}. Для деревьев без
    звезды это все орнаментации; brute_force=True всё равно перебирает перестановки.
    """
    if not brute_force and _is_unstarred_tree(d):
        return enumerate_ornamentations(d)
    bound = get_config().MAX_PERMUTATION_VERTICES
    if d.n > bound:
        raise SizeGuardError("перебор перестановок", d.n, bound)
    return [Ornamentation(d, m) for m in sorted(_acyclic_masks(d))]


def is_acyclic_ornamentation(d: Digraph, o: Ornamentation, brute_force: bool = False) -> bool:
    """Есть ли перестановка π с orn{areori{π}} = O"""
    _require_same(d, o)
    if not brute_force and _is_unstarred_tree(d):
        return True
    bound = get_config().MAX_PERMUTATION_VERTICES
    if d.n > bound:
        raise SizeGuardError("перебор перестановок", d.n, bound)
    return o.masks in _acyclic_masks(d)


def cyclic_ornamentations(d: Digraph, brute_force: bool = False) -> List[Ornamentation]:
    return [o for o in enumerate_ornamentations(d) if not is_acyclic_ornamentation(d, o, brute_force)]


def aorn_poset(d: Digraph, brute_force: bool = False) -> FinitePoset:
    ornamentations = acyclic_ornamentations(d, brute_force)
    return poset_from_masks(ornamentations, [o.masks for o in ornamentations])


def tree_paths(t: Digraph) -> List[Tuple[int, ...]]:
    """Все ориентированные пути дерева (по одному на сравнимую пару)"""
    paths = []

    def extend(path: Tuple[int, ...]):
        for w in members(t.out_masks[path[-1]]):
            longer = path + (w,)
            paths.append(longer)
            extend(longer)

    for start in t.vertices:
        extend((start,))
    return sorted(paths)


def cyclic_ornamentation_witness(t: Digraph) -> Optional[Ornamentation]:
    """O(d) = [a, d]_T, O(e) = [b, e]_T по пяти вершинам дерева со звездой"""
    config = five_vertex_configuration(t)
    if config is None:
        return None
    a, b, _, d, e = config
    masks = [1 << w for w in t.vertices]
    masks[d - 1] = tree_interval(t, a, d)
    masks[e - 1] = tree_interval(t, b, e)
    return make_ornamentation(t, masks)
