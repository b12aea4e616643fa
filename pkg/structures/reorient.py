"""
Переориентации транзитивного замыкания tc(D): свойства замкнутости,
ацикличность, частичные порядки Reori / AReori / Rcl / Rco / Rbi и
отображения orn{R}, reori{O}, maxreori{O}, areori{π}.

Переориентация R задаётся множеством rev(R) развёрнутых рёбер
объемлющего возрастающего графа.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, Any, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from config import get_config
from errors import (AmbientMismatchError, NotALatticeError, NotATreeError, OrnamentError,
                    SizeGuardError, StarredTreeError)
from graphs.digraph import (Digraph, Edge, classify_tree, five_vertex_configuration,
                            is_increasing, is_tree, members, transitive_closure, tree_leq)
from posets.poset import FinitePoset, poset_from_masks
from structures.ornament import (Ornamentation, enumerate_ornamentations, max_ornament_within,
                                 orn_join, orn_meet)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Reorientation:
    """Переориентация: ambient - объемлющий граф, rev - развёрнутые рёбра"""
    ambient: Digraph
    rev: FrozenSet[Edge]

    def __post_init__(self):
        rev = frozenset(self.rev)
        object.__setattr__(self, "rev", rev)
        if not rev <= self.ambient.edges:
            raise OrnamentError(f"Рёбра {sorted(rev - self.ambient.edges)} не принадлежат объемлющему графу")

    @property
    def oriented_edges(self) -> List[Edge]:
        return [(v, u) if (u, v) in self.rev else (u, v) for u, v in self.ambient.sorted_edges]

    @property
    def rev_mask(self) -> int:
        index = _edge_index(self.ambient)
        mask = 0
        for e in self.rev:
            mask |= 1 << index[e]
        return mask

    def __repr__(self) -> str:
        return "R{" + ",".join(f"{u}{v}" for u, v in sorted(self.rev)) + "}"

    def to_dict(self) -> Dict[str, Any]:
        return {"ambient": self.ambient.to_dict(), "rev": [list(e) for e in sorted(self.rev)]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Reorientation':
        return cls(Digraph.from_dict(data["ambient"]), frozenset(tuple(e) for e in data["rev"]))


@lru_cache(maxsize=256)
def _edge_index(ambient: Digraph) -> Dict[Edge, int]:
    return {e: i for i, e in enumerate(ambient.sorted_edges)}


@lru_cache(maxsize=256)
def _closure(d: Digraph) -> Digraph:
    return transitive_closure(d)


def _require_ambient(d: Digraph, r: Reorientation):
    if r.ambient != _closure(d):
        raise AmbientMismatchError("Переориентация задана не на tc(D)")


def _edge_closure(n: int, edges: Iterable[Edge]) -> FrozenSet[Edge]:
    return transitive_closure(Digraph(n, frozenset(edges))).edges


# --- свойства ---

def is_acyclic_reorientation(r: Reorientation) -> bool:
    graph = nx.DiGraph()
    graph.add_nodes_from(r.ambient.vertices)
    graph.add_edges_from(r.oriented_edges)
    return nx.is_directed_acyclic_graph(graph)


def reorientation_cycle(r: Reorientation) -> Optional[List[int]]:
    """Детерминированный цикл переориентации или None"""
    graph = nx.DiGraph()
    graph.add_nodes_from(r.ambient.vertices)
    graph.add_edges_from(r.oriented_edges)
    try:
        return [u for u, _ in nx.find_cycle(graph)]
    except nx.NetworkXNoCycle:
        return None


def _is_closed(ambient: Digraph, chosen: FrozenSet[Edge]) -> bool:
    for u, v in chosen:
        for w in members(ambient.out_masks[v]):
            if (v, w) in chosen and (u, w) not in chosen:
                return False
    return True


def is_transitively_closed(r: Reorientation) -> bool:
    return _is_closed(r.ambient, r.rev)


def is_transitively_coclosed(r: Reorientation) -> bool:
    return _is_closed(r.ambient, r.ambient.edges - r.rev)


def is_transitively_biclosed(r: Reorientation) -> bool:
    return is_transitively_closed(r) and is_transitively_coclosed(r)


# --- отображения ---

def orn_of_reorientation(d: Digraph, r: Reorientation) -> Ornamentation:
    """orn{R}(v) - наибольший орнамент в v среди вершин, достигающих v по rev(R)"""
    _require_ambient(d, r)
    reach = Digraph(d.n, r.rev).ancestor_masks
    return Ornamentation(d, tuple(max_ornament_within(d, v, reach[v]) for v in d.vertices))


def reori_of_ornamentation(d: Digraph, o: Ornamentation) -> Reorientation:
    """rev(reori{O}) = {(u, v) : u ∈ O(v)}"""
    ambient = _closure(d)
    return Reorientation(ambient, frozenset((u, v) for u, v in ambient.edges if o.mask(v) >> u & 1))


def _next_on_path(t: Digraph, u: int, v: int) -> int:
    for w in members(t.out_masks[u]):
        if w == v or t.reaches(w, v):
            return w
    raise OrnamentError(f"Нет пути из {u} в {v}")


def maxreori_of_ornamentation(t: Digraph, o: Ornamentation) -> Reorientation:
    """
    Максимум слоя над O для дерева: (u, v) развёрнуто, если нет w с
    u ∉ O(w) и u′, v ∈ O(w), где u′ - следующая за u вершина пути.
    """
    if not is_tree(t):
        raise NotATreeError("maxreori определено только для деревьев")
    ambient = _closure(t)
    rev = set()
    for u, v in ambient.edges:
        step = _next_on_path(t, u, v)
        blocked = any(not o.mask(w) >> u & 1 and o.mask(w) >> step & 1 and o.mask(w) >> v & 1
                      for w in t.vertices)
        if not blocked:
            rev.add((u, v))
    return Reorientation(ambient, frozenset(rev))


def orn_tree_edgewise(t: Digraph, r: Reorientation) -> Ornamentation:
    """Для ацикличных R на дереве: u ∈ O(v) ⇔ (u′, v) ∈ rev(R) для всех u ≤ u′ < v"""
    masks = []
    for v in t.vertices:
        mask = 1 << v
        for u in members(t.ancestor_masks[v]):
            between = [w for w in members(t.descendant_masks[u] | 1 << u) if w != v and t.reaches(w, v)]
            if all((w, v) in r.rev for w in between):
                mask |= 1 << u
        masks.append(mask)
    return Ornamentation(t, tuple(masks))


def areori_of_permutation(e: Digraph, perm: Sequence[int]) -> Reorientation:
    """rev(areori{π}) = inv(π) ∩ E; π задана однострочной записью"""
    position = {value: i for i, value in enumerate(perm)}
    if sorted(position) != list(e.vertices):
        raise OrnamentError(f"{list(perm)} не перестановка [1,{e.n}]")
    return Reorientation(e, frozenset((u, v) for u, v in e.edges if position[u] > position[v]))


def linear_extensions(r: Reorientation) -> List[Tuple[int, ...]]:
    """Перестановки π с areori{π} = R - линейные продолжения R"""
    graph = nx.DiGraph()
    graph.add_nodes_from(r.ambient.vertices)
    graph.add_edges_from(r.oriented_edges)
    return sorted(tuple(order) for order in nx.all_topological_sorts(graph))


# --- перечисление ---

def _guard_permutations(n: int):
    bound = get_config().MAX_PERMUTATION_VERTICES
    if n > bound:
        raise SizeGuardError("перебор перестановок", n, bound)


@lru_cache(maxsize=128)
def _areori(e: Digraph) -> Tuple[Reorientation, ...]:
    _guard_permutations(e.n)
    seen = {}
    for perm in permutations(e.vertices):
        r = areori_of_permutation(e, perm)
        seen.setdefault(r.rev, r)
    return tuple(sorted(seen.values(), key=lambda r: (len(r.rev), sorted(r.rev))))


def areori_reorientations(e: Digraph) -> List[Reorientation]:
    """Ацикличные переориентации E как образ всех перестановок"""
    return list(_areori(e))


def acyclic_reorientations(d: Digraph) -> List[Reorientation]:
    return areori_reorientations(_closure(d))


def all_reorientations(e: Digraph) -> List[Reorientation]:
    bound = get_config().MAX_REORIENTATION_EDGES
    edges = e.sorted_edges
    if len(edges) > bound:
        raise SizeGuardError("число рёбер для Reori", len(edges), bound)
    return [Reorientation(e, frozenset(edges[i] for i in range(len(edges)) if s >> i & 1))
            for s in range(1 << len(edges))]


def _reorientation_poset(items: List[Reorientation]) -> FinitePoset:
    return poset_from_masks(items, [(r.rev_mask,) for r in items])


def reori_poset(e: Digraph) -> FinitePoset:
    return _reorientation_poset(all_reorientations(e))


def areori_poset(e: Digraph) -> FinitePoset:
    return _reorientation_poset(areori_reorientations(e))


def closed_reorientations(e: Digraph, closed: bool = True, coclosed: bool = False) -> List[Reorientation]:
    """
    Перебор с возвратом по рёбрам E в порядке возрастания длины: ребро (u, w)
    решается после всех (u, v), (v, w). Замкнутость заставляет взять (u, w),
    козамкнутость заставляет его не брать.
    """
    if not is_increasing(e):
        raise OrnamentError("Объемлющий граф должен быть возрастающим")
    edges = sorted(e.edges, key=lambda uv: (uv[1] - uv[0], uv))
    splits = {(u, w): [v for v in members(e.out_masks[u]) if (v, w) in e.edges] for u, w in edges}
    chosen: Dict[Edge, bool] = {}
    results: List[Reorientation] = []

    def place(k: int):
        if k == len(edges):
            results.append(Reorientation(e, frozenset(x for x, taken in chosen.items() if taken)))
            return
        u, w = edges[k]
        must_take = closed and any(chosen[(u, v)] and chosen[(v, w)] for v in splits[(u, w)])
        must_skip = coclosed and any(not chosen[(u, v)] and not chosen[(v, w)] for v in splits[(u, w)])
        options = []
        if not must_skip:
            options.append(True)
        if not must_take:
            options.append(False)
        for option in options:
            chosen[(u, w)] = option
            place(k + 1)
        chosen.pop((u, w), None)

    place(0)
    results.sort(key=lambda r: (len(r.rev), sorted(r.rev)))
    return results


def rcl_poset(e: Digraph) -> FinitePoset:
    return _reorientation_poset(closed_reorientations(e, closed=True))


def rco_poset(e: Digraph) -> FinitePoset:
    return _reorientation_poset(closed_reorientations(e, closed=False, coclosed=True))


def rbi_poset(e: Digraph) -> FinitePoset:
    return _reorientation_poset(closed_reorientations(e, closed=True, coclosed=True))


def rbi_join_tree(r1: Reorientation, r2: Reorientation) -> Reorientation:
    """Объединение в Rbi(tc(T)) для дерева T: rev = tc(rev1 ∪ rev2)"""
    if r1.ambient != r2.ambient:
        raise AmbientMismatchError("Переориентации разных графов")
    return Reorientation(r1.ambient, _edge_closure(r1.ambient.n, r1.rev | r2.rev))


# --- решётка ацикличных переориентаций ---

@lru_cache(maxsize=128)
def forest_criterion_witness(e: Digraph) -> Optional[Tuple[int, ...]]:
    """Множество вершин, чья индуцированная транзитивная редукция не лес, или None"""
    graph = e.to_networkx()
    for size in range(3, e.n + 1):
        for subset in combinations(e.vertices, size):
            reduction = nx.transitive_reduction(graph.subgraph(subset))
            if not nx.is_forest(reduction.to_undirected()):
                return subset
    return None


def areori_is_lattice(e: Digraph) -> bool:
    return forest_criterion_witness(e) is None


def _require_areori_lattice(e: Digraph):
    witness = forest_criterion_witness(e)
    if witness is not None:
        raise NotALatticeError(f"AReori не решётка: индуцированный подграф на {list(witness)}")


def areori_join(r1: Reorientation, r2: Reorientation) -> Reorientation:
    """rev(R1 ∨ R2) = E ∩ tc(rev1 ∪ rev2)"""
    e = r1.ambient
    if r2.ambient != e:
        raise AmbientMismatchError("Переориентации разных графов")
    _require_areori_lattice(e)
    return Reorientation(e, e.edges & _edge_closure(e.n, r1.rev | r2.rev))


def areori_meet(r1: Reorientation, r2: Reorientation) -> Reorientation:
    """E ∖ rev(R1 ∧ R2) = E ∩ tc(E ∖ (rev1 ∩ rev2))"""
    e = r1.ambient
    if r2.ambient != e:
        raise AmbientMismatchError("Переориентации разных графов")
    _require_areori_lattice(e)
    kept = e.edges & _edge_closure(e.n, e.edges - (r1.rev & r2.rev))
    return Reorientation(e, e.edges - kept)


# --- слои отображения R ↦ orn{R} ---

def fiber(d: Digraph, o: Ornamentation) -> List[Reorientation]:
    return [r for r in all_reorientations(_closure(d)) if orn_of_reorientation(d, r) == o]


@dataclass
class FiberExtrema:
    minima: List[Reorientation] = field(default_factory=list)
    maxima: List[Reorientation] = field(default_factory=list)


def fiber_extrema(d: Digraph, o: Ornamentation) -> FiberExtrema:
    candidates = fiber(d, o)
    minima = [r for r in candidates if not any(s.rev < r.rev for s in candidates)]
    maxima = [r for r in candidates if not any(r.rev < s.rev for s in candidates)]
    return FiberExtrema(minima, maxima)


def coclosed_image(d: Digraph) -> Tuple[List[Ornamentation], bool]:
    """Образ козамкнутых переориентаций и признак, покрывает ли он Orn(D)"""
    image = {orn_of_reorientation(d, r) for r in closed_reorientations(_closure(d), closed=False, coclosed=True)}
    ordered = sorted(image, key=lambda o: o.masks)
    return ordered, len(image) == len(enumerate_ornamentations(d))


def cyclic_biclosed_witness(t: Digraph) -> Optional[Reorientation]:
    """rev = {(w, d) : a ≤ w < d} ∪ {(w, e) : b ≤ w < e} по пяти вершинам дерева со звездой"""
    config = five_vertex_configuration(t)
    if config is None:
        return None
    a, b, _, d, e = config
    ambient = _closure(t)
    rev = {(w, d) for w in t.vertices if w != d and tree_leq(t, a, w) and tree_leq(t, w, d)}
    rev |= {(w, e) for w in t.vertices if w != e and tree_leq(t, b, w) and tree_leq(t, w, e)}
    return Reorientation(ambient, frozenset(rev))


# --- проверка фактор-решётки для деревьев без звезды ---

@dataclass
class QuotientReport:
    """Итог проверки: R ↦ orn{R} сохраняет пересечения и объединения"""
    pairs_checked: int = 0
    meet_failures: List[Tuple[Reorientation, Reorientation]] = field(default_factory=list)
    join_failures: List[Tuple[Reorientation, Reorientation]] = field(default_factory=list)
    closed_pairs_checked: int = 0
    closed_meet_failures: List[Tuple[Reorientation, Reorientation]] = field(default_factory=list)
    fiber_sizes: Dict[str, int] = field(default_factory=dict)
    image_size: int = 0

    @property
    def success(self) -> bool:
        return not (self.meet_failures or self.join_failures or self.closed_meet_failures)


def closed_meet_failures(d: Digraph, limit: int = 400) -> Tuple[int, List[Tuple[Reorientation, Reorientation]]]:
    """orn{R1 ∩ R2} = orn{R1} ∧ orn{R2} на транзитивно замкнутых переориентациях"""
    closed = closed_reorientations(_closure(d), closed=True)
    if len(closed) > limit:
        raise SizeGuardError("число транзитивно замкнутых переориентаций", len(closed), limit)
    images = {r: orn_of_reorientation(d, r) for r in closed}
    failures, checked = [], 0
    for r1, r2 in combinations(closed, 2):
        checked += 1
        both = Reorientation(r1.ambient, r1.rev & r2.rev)
        if orn_of_reorientation(d, both) != orn_meet(d, images[r1], images[r2]):
            failures.append((r1, r2))
    return checked, failures


def quotient_check_unstarred(t: Digraph) -> QuotientReport:
    """Проверка того, что R ↦ orn{R} - сюръективный гомоморфизм решёток"""
    if not is_tree(t):
        raise NotATreeError("Проверка фактор-решётки определена для деревьев")
    classification = classify_tree(t)
    if classification.starred:
        raise StarredTreeError(f"Дерево со звездой, свидетель {classification.witness}")

    report = QuotientReport()
    acyclic = acyclic_reorientations(t)
    images = {r: orn_of_reorientation(t, r) for r in acyclic}
    for image in images.values():
        report.fiber_sizes[repr(image)] = report.fiber_sizes.get(repr(image), 0) + 1
    report.image_size = len(report.fiber_sizes)

    for r1, r2 in combinations(acyclic, 2):
        report.pairs_checked += 1
        if orn_of_reorientation(t, areori_meet(r1, r2)) != orn_meet(t, images[r1], images[r2]):
            report.meet_failures.append((r1, r2))
        if orn_of_reorientation(t, areori_join(r1, r2)) != orn_join(t, images[r1], images[r2]):
            report.join_failures.append((r1, r2))

    try:
        report.closed_pairs_checked, report.closed_meet_failures = closed_meet_failures(t)
    except SizeGuardError as e:
        logger.warning(f"Проверка на Rcl пропущена: {e}")
    logger.info(f"Фактор-решётка: {report.pairs_checked} пар, образ {report.image_size}")
    return report
