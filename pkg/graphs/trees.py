"""Ориентированные деревья с точностью до изоморфизма"""

import logging
from itertools import product
from typing import List

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from graphs.digraph import Digraph, relabel_increasing

logger = logging.getLogger(__name__)


def directed_trees(n: int) -> List[Digraph]:
    """
    Все ориентированные деревья на n вершинах с точностью до изоморфизма,
    каждое с возрастающей нумерацией (по топологическому порядку).
    """
    if n <= 0:
        return []
    if n == 1:
        return [Digraph(1, frozenset())]

    classes: List[nx.DiGraph] = []
    for tree in nx.nonisomorphic_trees(n):
        base = sorted(tuple(sorted(e)) for e in tree.edges())
        for flips in product((False, True), repeat=len(base)):
            oriented = nx.DiGraph()
            oriented.add_nodes_from(range(n))
            oriented.add_edges_from((b, a) if flip else (a, b) for (a, b), flip in zip(base, flips))
            if not any(DiGraphMatcher(known, oriented).is_isomorphic() for known in classes
                       if sorted(d for _, d in known.in_degree()) == sorted(d for _, d in oriented.in_degree())):
                classes.append(oriented)

    result = []
    for oriented in classes:
        raw = Digraph(n, frozenset((u + 1, v + 1) for u, v in oriented.edges()))
        result.append(relabel_increasing(raw))
    result.sort(key=lambda t: t.sorted_edges)
    logger.debug(f"Ориентированных деревьев на {n} вершинах: {len(result)}")
    return result


def all_directed_trees(max_n: int) -> List[Digraph]:
    trees = []
    for n in range(1, max_n + 1):
        trees.extend(directed_trees(n))
    return trees


def increasing_trees(n: int) -> List[Digraph]:
    """Все возрастающие нумерации всех ориентированных деревьев на n вершинах, без повторов"""
    seen = set()
    for tree in directed_trees(n):
        graph = tree.to_networkx()
        for order in nx.all_topological_sorts(graph):
            position = {v: i + 1 for i, v in enumerate(order)}
            seen.add(frozenset((position[u], position[v]) for u, v in tree.edges))
    result = [Digraph(n, edges) for edges in seen]
    result.sort(key=lambda t: t.sorted_edges)
    return result


def increasing_labeling_count(max_n: int) -> int:
    """Число возрастающих нумераций деревьев на 1..max_n вершинах (без повторов)"""
    return sum(len(increasing_trees(n)) for n in range(1, max_n + 1))
