"""
Источники гиперграфов: S(H) ∈ H для каждого гиперребра H.

Частичные порядки Sour(H) и ASour(H), отображения rev(S), reori{S},
orn{S}, sour{O}, asour{R}, arr(S), areori{S}, asour{π}.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from math import prod
from typing import Dict, Any, FrozenSet, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from config import get_config
from errors import AcyclicityRequiredError, AmbientMismatchError, OrnamentError, SizeGuardError
from graphs.digraph import Digraph, Edge, Hypergraph, is_increasing, members, path_hypergraph, transitive_closure
from posets.poset import FinitePoset
from structures.ornament import Ornamentation, acyclic_ornamentations, orn_leq
from structures.reorient import (Reorientation, is_acyclic_reorientation, orn_of_reorientation)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Sourcing:
    """Выбор источника sources[i] в гиперребре hypergraph.hyperedges[i]"""
    hypergraph: Hypergraph
    sources: Tuple[int, ...]

    def __post_init__(self):
        sources = tuple(int(v) for v in self.sources)
        object.__setattr__(self, "sources", sources)
        if len(sources) != len(self.hypergraph):
            raise OrnamentError("Число источников не совпадает с числом гиперрёбер")
        for h, v in zip(self.hypergraph.hyperedges, sources):
            if v not in h:
                raise OrnamentError(f"Источник {v} не лежит в гиперребре {sorted(h)}")

    def __call__(self, hyperedge) -> int:
        return self.sources[self.hypergraph.index(hyperedge)]

    def __repr__(self) -> str:
        parts = ("".join(map(str, sorted(h))) + f"→{v}" for h, v in zip(self.hypergraph.hyperedges, self.sources))
        return "S(" + " ".join(parts) + ")"

    def to_dict(self) -> Dict[str, Any]:
        data = self.hypergraph.to_dict()
        data["sources"] = list(self.sources)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Sourcing':
        hyperedges = [frozenset(h) for h in data["hyperedges"]]
        chosen = {h: v for h, v in zip(hyperedges, data["sources"])}
        h = Hypergraph(int(data.get("n", max(max(e) for e in hyperedges))), tuple(hyperedges))
        return cls(h, tuple(chosen[e] for e in h.hyperedges))


def make_sourcing(h: Hypergraph, choice: Mapping) -> Sourcing:
    """Источник по словарю «гиперребро → вершина»"""
    normalized = {frozenset(k): v for k, v in choice.items()}
    return Sourcing(h, tuple(normalized[e] for e in h.hyperedges))


def min_sourcing(h: Hypergraph) -> Sourcing:
    return Sourcing(h, tuple(min(e) for e in h.hyperedges))


def max_sourcing(h: Hypergraph) -> Sourcing:
    return Sourcing(h, tuple(max(e) for e in h.hyperedges))


# --- ацикличность ---

def hyperedge_digraph(s: Sourcing) -> nx.DiGraph:
    """Дуга H → H′, если S(H) ∈ H′ ∖ {S(H′)}"""
    graph = nx.DiGraph()
    masks = s.hypergraph.masks
    graph.add_nodes_from(range(len(masks)))
    for i, source in enumerate(s.sources):
        for j, mask in enumerate(masks):
            if i != j and mask >> source & 1 and s.sources[j] != source:
                graph.add_edge(i, j)
    return graph


def vertex_digraph(s: Sourcing) -> nx.DiGraph:
    """Дуги (h, S(H)) для h ∈ H ∖ {S(H)}"""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(1, s.hypergraph.n + 1))
    for h, source in zip(s.hypergraph.hyperedges, s.sources):
        graph.add_edges_from((x, source) for x in h if x != source)
    return graph


def is_acyclic_sourcing(s: Sourcing) -> bool:
    return nx.is_directed_acyclic_graph(hyperedge_digraph(s))


def acyclicity_formulations_agree(s: Sourcing) -> bool:
    return is_acyclic_sourcing(s) == nx.is_directed_acyclic_graph(vertex_digraph(s))


def sourcing_cycle(s: Sourcing) -> Optional[List[FrozenSet[int]]]:
    """Кратчайший цикл гиперрёбер (поиск в ширину из каждого гиперребра)"""
    graph = hyperedge_digraph(s)
    best: Optional[List[int]] = None
    for start in sorted(graph.nodes):
        parents = {start: None}
        queue = deque([start])
        found = None
        while queue and found is None:
            node = queue.popleft()
            for nxt in sorted(graph.successors(node)):
                if nxt == start:
                    found = node
                    break
                if nxt not in parents:
                    parents[nxt] = node
                    queue.append(nxt)
        if found is None:
            continue
        cycle = []
        node = found
        while node is not None:
            cycle.append(node)
            node = parents[node]
        cycle.reverse()
        if best is None or len(cycle) < len(best):
            best = cycle
    if best is None:
        return None
    return [s.hypergraph.hyperedges[i] for i in best]


# --- перечисление ---

def sourcing_count(h: Hypergraph) -> int:
    return prod(len(e) for e in h.hyperedges)


def enumerate_sourcings(h: Hypergraph, limit: Optional[int] = None) -> List[Sourcing]:
    bound = limit if limit is not None else get_config().MAX_SOURCING_PRODUCT
    total = sourcing_count(h)
    if total > bound:
        raise SizeGuardError("число источников (произведение |H|)", total, bound)
    choices = [sorted(e) for e in h.hyperedges]
    return [Sourcing(h, combo) for combo in product(*choices)]


def asour_of_permutation(h: Hypergraph, perm: Sequence[int]) -> Sourcing:
    """Источник гиперребра - его первая вершина в однострочной записи π"""
    position = {value: i for i, value in enumerate(perm)}
    return Sourcing(h, tuple(min(e, key=position.__getitem__) for e in h.hyperedges))


@lru_cache(maxsize=128)
def _acyclic_sourcings(h: Hypergraph, method: str) -> Tuple[Sourcing, ...]:
    if method == "filter":
        found = [s for s in enumerate_sourcings(h) if is_acyclic_sourcing(s)]
    elif method == "permutations":
        bound = get_config().MAX_PERMUTATION_VERTICES
        if h.n > bound:
            raise SizeGuardError("перебор перестановок", h.n, bound)
        found = list({asour_of_permutation(h, perm) for perm in permutations(range(1, h.n + 1))})
    else:
        raise OrnamentError(f"Неизвестный способ перечисления: {method}")
    return tuple(sorted(found, key=lambda s: s.sources))


def acyclic_sourcings(h: Hypergraph, method: Optional[str] = None) -> List[Sourcing]:
    """
    ASour(H): фильтрация Sour(H), пока ∏|H| в пределах ограничения,
    иначе образ всех перестановок.
    """
    if method is None:
        method = "filter" if sourcing_count(h) <= get_config().MAX_SOURCING_PRODUCT else "permutations"
    return list(_acyclic_sourcings(h, method))


def sourcing_leq(s1: Sourcing, s2: Sourcing) -> bool:
    return all(a <= b for a, b in zip(s1.sources, s2.sources))


def _sourcing_poset(items: List[Sourcing]) -> FinitePoset:
    rows = [s.sources for s in items]
    down = []
    for b in rows:
        mask = 0
        for i, a in enumerate(rows):
            if all(x <= y for x, y in zip(a, b)):
                mask |= 1 << i
        down.append(mask)
    return FinitePoset(items, down, validate=False)


def sour_poset(h: Hypergraph) -> FinitePoset:
    return _sourcing_poset(enumerate_sourcings(h))


def asour_poset(h: Hypergraph, method: Optional[str] = None) -> FinitePoset:
    return _sourcing_poset(acyclic_sourcings(h, method))


# --- отображения ---

def _require_path_hypergraph(d: Digraph, s: Sourcing):
    if s.hypergraph != path_hypergraph(d):
        raise AmbientMismatchError("Источник задан не на гиперграфе путей P(D)")


def rev_of_sourcing(d: Digraph, s: Sourcing) -> FrozenSet[Edge]:
    """rev(S) = {(u, v) : путь P из u в v с S(P) = v}; концы пути берутся как min и max, что верно только для возрастающего D"""
    if not is_increasing(d):
        raise OrnamentError("rev(S) определено для возрастающих графов (u < v для каждого ребра)")
    _require_path_hypergraph(d, s)
    return frozenset((min(h), max(h)) for h, v in zip(s.hypergraph.hyperedges, s.sources) if v == max(h))


def reori_of_sourcing(d: Digraph, s: Sourcing) -> Reorientation:
    return Reorientation(transitive_closure(d), rev_of_sourcing(d, s))


def orn_of_sourcing(d: Digraph, s: Sourcing) -> Ornamentation:
    """orn{S} = orn{reori{S}}"""
    return orn_of_reorientation(d, reori_of_sourcing(d, s))


def sour_of_ornamentation(d: Digraph, o: Ornamentation) -> Sourcing:
    """Источник пути P из u - наибольшая w ∈ P с u ∈ O(w)"""
    h = path_hypergraph(d)
    sources = []
    for e in h.hyperedges:
        start = min(e)
        sources.append(max(w for w in e if o.mask(w) >> start & 1))
    return Sourcing(h, tuple(sources))


def is_transitive_rev(d: Digraph, s: Sourcing) -> bool:
    rev = rev_of_sourcing(d, s)
    return all((u, x) in rev for u, v in rev for w, x in rev if w == v)


def asour_of_reorientation(d: Digraph, r: Reorientation) -> Sourcing:
    """Источник пути P в ацикличной R"""
    if not is_acyclic_reorientation(r):
        raise AcyclicityRequiredError("asour определено только для ацикличных переориентаций")
    h = path_hypergraph(d)
    sources = []
    for e in h.hyperedges:
        for x in sorted(e):
            if all(((x, y) not in r.rev) if x < y else ((y, x) in r.rev) for y in e if y != x):
                sources.append(x)
                break
    return Sourcing(h, tuple(sources))


def arr(s: Sourcing) -> FrozenSet[Edge]:
    """arr(S) = {(u, S(P)) : u ∈ P ∖ {S(P)}}"""
    return frozenset((u, v) for e, v in zip(s.hypergraph.hyperedges, s.sources) for u in e if u != v)


def areori_of_sourcing(d: Digraph, s: Sourcing) -> Reorientation:
    """rev(areori{S}) = tc(arr(S)) ∩ tc(D)"""
    _require_path_hypergraph(d, s)
    if not is_acyclic_sourcing(s):
        raise AcyclicityRequiredError("areori определено только для ацикличных источников")
    ambient = transitive_closure(d)
    arrows = transitive_closure(Digraph(d.n, arr(s))).edges
    return Reorientation(ambient, ambient.edges & arrows)


# --- изоморфизм ASour(P(D)) ≅ AOrn(D) ---

@dataclass
class IsomorphismCheck:
    """Итог проверки отображения S ↦ orn{S} на ацикличных источниках"""
    size: int = 0
    injective: bool = True
    image_matches: bool = True
    order_preserved: bool = True
    order_reflected: bool = True
    witnesses: List[str] = field(default_factory=list)

    @property
    def success(self) -> bool:
        return self.injective and self.image_matches and self.order_preserved and self.order_reflected


def asour_aorn_isomorphism_check(d: Digraph, brute_force: bool = False) -> IsomorphismCheck:
    """S ↦ orn{S} - изоморфизм ASour(P(D)) на AOrn(D); brute_force как в acyclic_ornamentations"""
    h = path_hypergraph(d)
    sourcings = acyclic_sourcings(h)
    images = [orn_of_sourcing(d, s) for s in sourcings]
    check = IsomorphismCheck(size=len(sourcings))

    if len(set(images)) != len(images):
        check.injective = False
        check.witnesses.append("S ↦ orn{S} не инъективно")
    target = set(acyclic_ornamentations(d, brute_force))
    if set(images) != target:
        check.image_matches = False
        check.witnesses.append(f"Образ {len(set(images))} ≠ |AOrn| = {len(target)}")

    for i, s1 in enumerate(sourcings):
        for j, s2 in enumerate(sourcings):
            left, right = sourcing_leq(s1, s2), orn_leq(images[i], images[j])
            if left and not right:
                check.order_preserved = False
                check.witnesses.append(f"{s1!r} ≤ {s2!r}, но образы несравнимы")
            if right and not left:
                check.order_reflected = False
                check.witnesses.append(f"orn{{{s1!r}}} ≤ orn{{{s2!r}}}, но источники несравнимы")
    return check
