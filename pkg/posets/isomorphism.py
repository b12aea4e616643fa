"""Изоморфизм частичных порядков через диаграммы Хассе (VF2 из networkx)"""

import logging
from dataclasses import dataclass
from typing import Dict, Hashable, Optional

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from posets.poset import FinitePoset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IsomorphismResult:
    isomorphic: bool
    mapping: Optional[Dict[Hashable, Hashable]] = None

    def __bool__(self) -> bool:
        return self.isomorphic


def _signature(p: FinitePoset, i: int):
    return p.heights[i], len(p.upper_covers[i]), len(p.lower_covers[i])


def _hasse_graph(p: FinitePoset) -> nx.DiGraph:
    graph = nx.DiGraph()
    order = sorted(range(len(p)), key=lambda i: (_signature(p, i), repr(p.elements[i])))
    for i in order:
        graph.add_node(i, sig=_signature(p, i))
    graph.add_edges_from(p.covers)
    return graph


def poset_isomorphic(p: FinitePoset, q: FinitePoset) -> IsomorphismResult:
    """Точная проверка изоморфизма с биекцией-свидетелем"""
    if len(p) != len(q) or len(p.covers) != len(q.covers):
        return IsomorphismResult(False)
    if sorted(_signature(p, i) for i in range(len(p))) != sorted(_signature(q, i) for i in range(len(q))):
        return IsomorphismResult(False)

    matcher = DiGraphMatcher(_hasse_graph(p), _hasse_graph(q),
                             node_match=lambda a, b: a["sig"] == b["sig"])
    if not matcher.is_isomorphic():
        return IsomorphismResult(False)
    mapping = {p.elements[i]: q.elements[j] for i, j in sorted(matcher.mapping.items())}
    return IsomorphismResult(True, mapping)
