"""
Гиперграфические многогранники и графические зонотопы как облака
вершин: вершина Σ_H e_{S(H)} для каждого ацикличного источника.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Any, List, Sequence, Tuple

import networkx as nx

from config import get_config
from errors import DegenerateInputError, SizeGuardError, StarredTreeError, ZeroDirectionError
from graphs.digraph import Digraph, Hypergraph, classify_tree, path_hypergraph, transitive_closure
from graphs.fixtures import edge_hypergraph
from polytope.simplex import in_convex_hull
from posets.isomorphism import poset_isomorphic
from posets.poset import FinitePoset
from structures.ornament import orn_poset
from structures.reorient import Reorientation, areori_poset
from structures.sourcing import Sourcing, acyclic_sourcings, asour_poset

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]


def omega(n: int) -> Point:
    """(n−1, n−3, …, 1−n)"""
    return tuple(n - 1 - 2 * i for i in range(n))


def sourcing_point(s: Sourcing) -> Point:
    coordinates = [0] * s.hypergraph.n
    for source in s.sources:
        coordinates[source - 1] += 1
    return tuple(coordinates)


def hypergraphic_vertices(h: Hypergraph) -> Dict[Sourcing, Point]:
    """Точка для каждого ацикличного источника; отображение обязано быть инъективным"""
    sourcings = acyclic_sourcings(h)
    bound = get_config().MAX_POLYTOPE_POINTS
    if len(sourcings) > bound:
        raise SizeGuardError("число вершин многогранника", len(sourcings), bound)
    points = {s: sourcing_point(s) for s in sourcings}
    if len(set(points.values())) != len(points):
        raise DegenerateInputError("Разные ацикличные источники дали одну точку")
    return points


def skeleton(points: Sequence[Point]) -> nx.Graph:
    """Ребро (p, q), если середина pq не лежит в выпуклой оболочке остальных точек"""
    if len(set(points)) != len(points):
        raise DegenerateInputError("Совпадающие точки в облаке")
    graph = nx.Graph()
    graph.add_nodes_from(range(len(points)))
    for i, j in combinations(range(len(points)), 2):
        midpoint = [Fraction(a + b, 2) for a, b in zip(points[i], points[j])]
        others = [p for k, p in enumerate(points) if k != i and k != j]
        if not in_convex_hull(others, midpoint):
            graph.add_edge(i, j)
    logger.debug(f"Скелет: {len(points)} вершин, {graph.number_of_edges()} рёбер")
    return graph


@dataclass
class OrientedSkeleton:
    sourcings: List[Sourcing]
    points: List[Point]
    graph: nx.Graph
    oriented: nx.DiGraph

    def to_dict(self) -> Dict[str, Any]:
        return {
            "points": [list(p) for p in self.points],
            "sourcings": [list(s.sources) for s in self.sourcings],
            "edges": sorted([i, j] for i, j in self.oriented.edges),
        }

    def to_dot(self, name: str = "skeleton") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i, p in enumerate(self.points):
            lines.append(f'  n{i} [label="{",".join(map(str, p))}"];')
        for i, j in sorted(self.oriented.edges):
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def oriented_skeleton(h: Hypergraph) -> OrientedSkeleton:
    """Рёбра скелета ориентированы в сторону убывания ⟨ω, ·⟩"""
    vertices = hypergraphic_vertices(h)
    sourcings = list(vertices)
    points = [vertices[s] for s in sourcings]
    graph = skeleton(points)
    direction = omega(h.n)
    oriented = nx.DiGraph()
    oriented.add_nodes_from(graph.nodes)
    for i, j in graph.edges:
        dot = sum(w * (b - a) for w, a, b in zip(direction, points[i], points[j]))
        if dot == 0:
            raise ZeroDirectionError(f"Ребро {points[i]}–{points[j]} ортогонально ω")
        oriented.add_edge(*((i, j) if dot < 0 else (j, i)))
    return OrientedSkeleton(sourcings, points, graph, oriented)


def skeleton_poset(sk: OrientedSkeleton) -> FinitePoset:
    down = []
    for j in range(len(sk.sourcings)):
        mask = 1 << j
        for i in nx.ancestors(sk.oriented, j):
            mask |= 1 << i
        down.append(mask)
    return FinitePoset(sk.sourcings, down)


def oriented_skeleton_poset(h: Hypergraph) -> FinitePoset:
    """Транзитивное замыкание ориентированного скелета как порядок на ацикличных источниках"""
    return skeleton_poset(oriented_skeleton(h))


def edge_sourcing_to_reorientation(d: Digraph, s: Sourcing) -> Reorientation:
    """Источник ребра {u, v} графа d - начало ориентированного ребра"""
    rev = set()
    for edge, source in zip(s.hypergraph.hyperedges, s.sources):
        u, v = sorted(edge)
        if (u, v) in d.edges and source == v:
            rev.add((u, v))
        elif (v, u) in d.edges and source == u:
            rev.add((v, u))
    return Reorientation(d, frozenset(rev))


@dataclass
class RealizationReport:
    tree: Dict[str, Any]
    polytope_points: int = 0
    polytope_isomorphic: bool = False
    hasse_in_skeleton: bool = False
    extremes_match: bool = False
    zonotope_points: int = 0
    zonotope_covers_match: bool = False
    notes: List[str] = field(default_factory=list)

    @property
    def success(self) -> bool:
        return (self.polytope_isomorphic and self.hasse_in_skeleton
                and self.extremes_match and self.zonotope_covers_match)

    def to_dict(self) -> Dict[str, Any]:
        return {**self.__dict__, "success": self.success}


def zonotope_covers_match(d: Digraph) -> Tuple[int, bool]:
    """Рёбра скелета зонотопа tc(d) совпадают с покрытиями AReori(tc(d))"""
    closure = transitive_closure(d)
    sk = oriented_skeleton(edge_hypergraph(closure))
    mapped = [edge_sourcing_to_reorientation(closure, s) for s in sk.sourcings]
    skeleton_pairs = {frozenset((mapped[i], mapped[j])) for i, j in sk.graph.edges}
    poset = areori_poset(closure)
    cover_pairs = {frozenset((poset.elements[i], poset.elements[j])) for i, j in poset.covers}
    return len(sk.points), skeleton_pairs == cover_pairs


def hasse_within_skeleton(h: Hypergraph, sk: OrientedSkeleton) -> bool:
    poset = asour_poset(h)
    position = {s: i for i, s in enumerate(sk.sourcings)}
    return all(sk.graph.has_edge(position[poset.elements[i]], position[poset.elements[j]])
               for i, j in poset.covers)


def realization_check(t: Digraph) -> RealizationReport:
    """
    Для дерева без звезды: ориентированный скелет многогранника P(t) изоморфен Orn(t);
    для зонотопа tc(t) рёбра скелета - это покрытия AReori.
    """
    if classify_tree(t).starred:
        raise StarredTreeError(f"Дерево {t.to_dict()} со звездой")
    report = RealizationReport(tree=t.to_dict())
    h = path_hypergraph(t)
    sk = oriented_skeleton(h)
    report.polytope_points = len(sk.points)

    polytope = skeleton_poset(sk)
    report.polytope_isomorphic = poset_isomorphic(polytope, orn_poset(t)).isomorphic
    report.hasse_in_skeleton = hasse_within_skeleton(h, sk)

    sources = [v for v in sk.oriented.nodes if sk.oriented.in_degree(v) == 0]
    sinks = [v for v in sk.oriented.nodes if sk.oriented.out_degree(v) == 0]
    bottom, top = polytope.bottom_index(), polytope.top_index()
    report.extremes_match = sources == [bottom] and sinks == [top] and bottom is not None
    if sk.graph.number_of_edges() != len(polytope.covers):
        report.notes.append("скелет не транзитивно редуцирован")

    report.zonotope_points, report.zonotope_covers_match = zonotope_covers_match(t)
    if not report.success:
        logger.warning(f"Реализация не подтверждена для {t.to_dict()}: {report.to_dict()}")
    return report
