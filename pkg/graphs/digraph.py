"""
Ориентированные графы на [n], транзитивное замыкание, гиперграф путей
и классификация деревьев (со звездой / без звезды).

Множества вершин хранятся битовыми масками: вершина v соответствует биту 1 << v.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Any, List, Optional, Tuple, Iterable, FrozenSet

import networkx as nx

from errors import NotATreeError, OrnamentError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def mask_of(vertices: Iterable[int]) -> int:
    """Битовая маска множества вершин"""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> List[int]:
    """Вершины маски по возрастанию"""
    result = []
    v = 0
    while mask:
        if mask & 1:
            result.append(v)
        mask >>= 1
        v += 1
    return result


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def highest(mask: int) -> int:
    return mask.bit_length() - 1


@dataclass(frozen=True)
class Digraph:
    """Ориентированный граф на вершинах 1..n"""
    n: int
    edges: FrozenSet[Edge]

    def __post_init__(self):
        edges = frozenset((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise OrnamentError(f"Отрицательное число вершин: {self.n}")
        for u, v in edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise OrnamentError(f"Ребро ({u},{v}) вне [1,{self.n}]")
            if u == v:
                raise OrnamentError(f"Петля в вершине {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> 'Digraph':
        return cls(n, frozenset(edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def full_mask(self) -> int:
        return mask_of(self.vertices)

    @cached_property
    def out_masks(self) -> Tuple[int, ...]:
        masks = [0] * (self.n + 1)
        for u, v in self.edges:
            masks[u] |= 1 << v
        return tuple(masks)

    @cached_property
    def in_masks(self) -> Tuple[int, ...]:
        masks = [0] * (self.n + 1)
        for u, v in self.edges:
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def descendant_masks(self) -> Tuple[int, ...]:
        """Для каждой v: вершины, достижимые из v путём длины ≥ 1"""
        return tuple(_closure_masks(self.out_masks, self.n))

    @cached_property
    def ancestor_masks(self) -> Tuple[int, ...]:
        """Для каждой v: вершины, из которых v достижима путём длины ≥ 1"""
        return tuple(_closure_masks(self.in_masks, self.n))

    def in_degree(self, v: int) -> int:
        return bin(self.in_masks[v]).count("1")

    def out_degree(self, v: int) -> int:
        return bin(self.out_masks[v]).count("1")

    def reaches(self, u: int, v: int) -> bool:
        return bool(self.descendant_masks[u] >> v & 1)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.sorted_edges)
        return graph

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Digraph':
        return cls(int(data["n"]), frozenset(tuple(e) for e in data["edges"]))


def _closure_masks(step: Tuple[int, ...], n: int) -> List[int]:
    result = [0] * (n + 1)
    for v in range(1, n + 1):
        seen = 0
        frontier = step[v]
        while frontier:
            seen |= frontier
            nxt = 0
            for w in members(frontier):
                nxt |= step[w]
            frontier = nxt & ~seen
        result[v] = seen
    return result


@dataclass(frozen=True)
class Hypergraph:
    """Гиперграф на [n]; гиперрёбра хранятся в каноническом порядке"""
    n: int
    hyperedges: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        canonical = tuple(sorted((frozenset(h) for h in self.hyperedges), key=lambda h: tuple(sorted(h))))
        if len(set(canonical)) != len(canonical):
            raise OrnamentError("Повторяющиеся гиперрёбра")
        for h in canonical:
            if len(h) < 2:
                raise OrnamentError(f"Гиперребро {sorted(h)} содержит меньше двух вершин")
            if not all(1 <= v <= self.n for v in h):
                raise OrnamentError(f"Гиперребро {sorted(h)} вне [1,{self.n}]")
        object.__setattr__(self, "hyperedges", canonical)

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        return tuple(mask_of(h) for h in self.hyperedges)

    def index(self, hyperedge: Iterable[int]) -> int:
        return self.hyperedges.index(frozenset(hyperedge))

    def __len__(self) -> int:
        return len(self.hyperedges)

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "hyperedges": [sorted(h) for h in self.hyperedges]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Hypergraph':
        return cls(int(data["n"]), tuple(frozenset(h) for h in data["hyperedges"]))


@dataclass(frozen=True)
class TreeComparison:
    """Результат сравнения двух вершин в порядке дерева"""
    relation: str  # "leq", "geq", "equal" или "incomparable"
    path: Optional[Tuple[int, ...]] = None

    @property
    def comparable(self) -> bool:
        return self.relation != "incomparable"


@dataclass(frozen=True)
class TreeClassification:
    starred: bool
    witness: Optional[Edge] = None


def transitive_closure(d: Digraph) -> Digraph:
    """Транзитивное замыкание: ребро (u,v) для каждого пути из u в v"""
    edges = set()
    for u in d.vertices:
        for v in members(d.descendant_masks[u]):
            if v != u:
                edges.add((u, v))
    return Digraph(d.n, frozenset(edges))


def path_hypergraph(d: Digraph) -> Hypergraph:
    """Гиперграф множеств вершин ориентированных путей (не менее двух вершин)"""
    found = set()

    def extend(v: int, visited: int):
        for w in members(d.out_masks[v] & ~visited):
            grown = visited | 1 << w
            found.add(grown)
            extend(w, grown)

    for start in d.vertices:
        extend(start, 1 << start)
    return Hypergraph(d.n, tuple(frozenset(members(m)) for m in found))


def is_increasing(d: Digraph) -> bool:
    return all(u < v for u, v in d.edges)


def is_tree(t: Digraph) -> bool:
    if t.n == 0 or len(t.edges) != t.n - 1:
        return False
    return nx.is_tree(t.to_networkx().to_undirected())


def is_rooted_tree(t: Digraph) -> bool:
    return is_tree(t) and all(t.out_degree(v) <= 1 for v in t.vertices)


def _require_tree(t: Digraph):
    if not is_tree(t):
        raise NotATreeError(f"Граф {t.to_dict()} не является деревом")


def tree_order(t: Digraph, u: int, v: int) -> TreeComparison:
    """Сравнение u и v в порядке дерева и путь [u, v]_T"""
    _require_tree(t)
    if u == v:
        return TreeComparison("equal", (u,))
    route = tuple(nx.shortest_path(t.to_networkx().to_undirected(), u, v))
    steps = list(zip(route, route[1:]))
    if all(step in t.edges for step in steps):
        return TreeComparison("leq", route)
    if all((b, a) in t.edges for a, b in steps):
        return TreeComparison("geq", tuple(reversed(route)))
    return TreeComparison("incomparable")


def tree_leq(t: Digraph, u: int, v: int) -> bool:
    return u == v or t.reaches(u, v)


def tree_interval(t: Digraph, u: int, v: int) -> int:
    """Маска пути [u, v]_T; ноль, если u не предшествует v"""
    if not tree_leq(t, u, v):
        return 0
    return (t.descendant_masks[u] | 1 << u) & (t.ancestor_masks[v] | 1 << v)


def down_set(t: Digraph, v: int) -> FrozenSet[int]:
    """Множество {u : u ≤_T v}, включая саму v"""
    return frozenset(members(t.ancestor_masks[v] | 1 << v))


def classify_tree(t: Digraph) -> TreeClassification:
    """Дерево со звездой, если есть u ≤_T v с полустепенью захода u ≥ 2 и исхода v ≥ 2"""
    _require_tree(t)
    for u in t.vertices:
        if t.in_degree(u) < 2:
            continue
        for v in [u] + members(t.descendant_masks[u]):
            if t.out_degree(v) >= 2:
                return TreeClassification(True, (u, v))
    return TreeClassification(False)


def has_induced_alternating_cycle(e: Digraph) -> Optional[Tuple[int, ...]]:
    """Индуцированный цикл, направления рёбер которого чередуются; None если такого нет"""
    undirected = e.to_networkx().to_undirected()
    best = None
    for cycle in nx.chordless_cycles(undirected):
        if len(cycle) < 4 or len(cycle) % 2:
            continue
        forward = [(a, b) in e.edges for a, b in zip(cycle, cycle[1:] + cycle[:1])]
        if all(forward[i] != forward[i + 1] for i in range(len(forward) - 1)) and forward[0] != forward[-1]:
            candidate = tuple(cycle)
            if best is None or (len(candidate), sorted(candidate)) < (len(best), sorted(best)):
                best = candidate
    return best


def five_vertex_configuration(t: Digraph) -> Optional[Tuple[int, int, int, int, int]]:
    """Вершины a, b, c, d, e: a, b < c < d, e при несравнимых a, b и несравнимых d, e"""
    _require_tree(t)
    below, above = t.ancestor_masks, t.descendant_masks
    for c in t.vertices:
        lows, highs = members(below[c]), members(above[c])
        pair_low = next(((a, b) for a in lows for b in lows
                         if a < b and not t.reaches(a, b) and not t.reaches(b, a)), None)
        pair_high = next(((d, x) for d in highs for x in highs
                          if d < x and not t.reaches(d, x) and not t.reaches(x, d)), None)
        if pair_low and pair_high:
            return pair_low[0], pair_low[1], c, pair_high[0], pair_high[1]
    return None


def relabel_increasing(d: Digraph) -> Digraph:
    """Перенумерация вершин ацикличного графа по топологическому порядку"""
    order = list(nx.lexicographical_topological_sort(d.to_networkx()))
    position = {v: i + 1 for i, v in enumerate(order)}
    return Digraph(d.n, frozenset((position[u], position[v]) for u, v in d.edges))
