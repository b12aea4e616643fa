"""Каталог фиксированных графов"""

import logging
from typing import Callable, Dict, List

from graphs.digraph import Digraph, Hypergraph

logger = logging.getLogger(__name__)


def increasing_path(n: int) -> Digraph:
    """Путь I_n: 1 → 2 → … → n"""
    return Digraph(n, frozenset((i, i + 1) for i in range(1, n)))


def star_tree_x() -> Digraph:
    """Наименьшее дерево со звездой"""
    return Digraph(5, frozenset({(1, 3), (2, 3), (3, 4), (3, 5)}))


def diamond() -> Digraph:
    return Digraph(4, frozenset({(1, 2), (1, 3), (2, 4), (3, 4)}))


def graph_r() -> Digraph:
    """Граф, чей гиперграф путей {13, 134, 15, 24, 25, 34}"""
    return Digraph(5, frozenset({(1, 3), (1, 5), (2, 4), (2, 5), (3, 4)}))


def pentagon_with_chord() -> Digraph:
    """Путь 1 → … → 5 с хордой (1,5); слой минимальной орнаментации без максимума"""
    return Digraph(5, frozenset({(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)}))


def broom(m: int, n: int) -> Digraph:
    """
    (m,n)-метла: щетинки 1..m присоединены к началу рукояти m+1 → … → m+n.
    При n = 0 остаются m изолированных вершин.
    """
    edges = set()
    if n > 0:
        edges.update((i, m + 1) for i in range(1, m + 1))
        edges.update((m + j, m + j + 1) for j in range(1, n))
    return Digraph(m + n, frozenset(edges))


def comb(n: int) -> Digraph:
    """n-гребёнка: зубья 1,3,…,2n−1, рукоять 2,4,…,2n; родитель i - это i+1 (i нечётно) или i+2"""
    edges = set()
    for i in range(1, 2 * n + 1):
        if i % 2:
            edges.add((i, i + 1))
        elif i + 2 <= 2 * n:
            edges.add((i, i + 2))
    return Digraph(2 * n, frozenset(edges))


def comb_minus_bottom(n: int) -> Digraph:
    """n-гребёнка без первого зуба (вершины перенумерованы 1..2n−1)"""
    base = comb(n)
    edges = {(u - 1, v - 1) for u, v in base.edges if u != 1}
    return Digraph(max(base.n - 1, 0), frozenset(edges))


def complete_graph(n: int) -> Digraph:
    return Digraph(n, frozenset((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))


def edge_hypergraph(d: Digraph) -> Hypergraph:
    """Гиперграф из рёбер графа (зонотоп вместо многогранника)"""
    return Hypergraph(d.n, tuple(frozenset(e) for e in d.edges))


FIXTURES: Dict[str, Callable[[], Digraph]] = {
    "I2": lambda: increasing_path(2),
    "I3": lambda: increasing_path(3),
    "I4": lambda: increasing_path(4),
    "I5": lambda: increasing_path(5),
    "X": star_tree_x,
    "D": diamond,
    "R": graph_r,
    "C5": pentagon_with_chord,
    "broom21": lambda: broom(2, 1),
    "broom22": lambda: broom(2, 2),
    "comb2": lambda: comb(2),
    "comb3": lambda: comb(3),
}


def fixture_names() -> List[str]:
    return sorted(FIXTURES)


def fixture(name: str) -> Digraph:
    """Граф каталога по имени"""
    if name not in FIXTURES:
        raise KeyError(f"Неизвестная фикстура: {name}")
    return FIXTURES[name]()
