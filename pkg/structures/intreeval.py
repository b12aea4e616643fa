"""
Интривальные гиперграфы: гиперрёбра - множества вершин путей возрастающего
дерева. Условия PIC и звёздной разреженности, проекции из решётки
орнаментаций, явная формула объединения и проверка характеризации
решёточности ASour.
"""

import logging
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Any, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from config import get_config
from errors import (AcyclicityRequiredError, BudgetExceededError, HypothesisError,
                    IncomparablePairError, OrnamentError)
from graphs.digraph import (Digraph, Hypergraph, is_increasing, is_tree, members,
                            path_hypergraph, tree_interval, tree_leq)
from structures.ornament import (Ornamentation, enumerate_ornamentations, maximal_ornamentation,
                                 minimal_ornamentation, orn_join, orn_leq, orn_meet)
from structures.sourcing import (Sourcing, acyclic_sourcings, asour_poset, enumerate_sourcings, hyperedge_digraph,
                                 is_acyclic_sourcing, sourcing_count, sourcing_leq)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntreevalHypergraph:
    """Подгиперграф гиперграфа путей возрастающего дерева"""
    tree: Digraph
    hypergraph: Hypergraph

    def __post_init__(self):
        if not (is_tree(self.tree) and is_increasing(self.tree)):
            raise OrnamentError("Нужно возрастающее ориентированное дерево")
        paths = set(path_hypergraph(self.tree).hyperedges)
        for h in self.hypergraph.hyperedges:
            if h not in paths:
                raise OrnamentError(f"Гиперребро {sorted(h)} не является путём дерева")

    @classmethod
    def of(cls, tree: Digraph, hyperedges) -> 'IntreevalHypergraph':
        return cls(tree, Hypergraph(tree.n, tuple(frozenset(h) for h in hyperedges)))

    @property
    def hyperedges(self) -> Tuple[FrozenSet[int], ...]:
        return self.hypergraph.hyperedges


@dataclass(frozen=True)
class StarGraph:
    """Неориентированный граф между входящими соседями u и исходящими соседями v"""
    u: int
    v: int
    left: Tuple[int, ...]
    right: Tuple[int, ...]
    edges: FrozenSet[Tuple[int, int]]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.left + self.right)
        graph.add_edges_from(self.edges)
        return graph


# --- PIC ---

def path_intersection_counterexample(ii: IntreevalHypergraph) -> Optional[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """
    Пара (I, J) с |I ∩ J| > 1, min(I) < min(I ∩ J), max(J) > max(I ∩ J),
    для которой нет K ∈ II с I ∩ J ⊆ K ⊆ [min(J), max(I)]_T.
    """
    t = ii.tree
    masks = ii.hypergraph.masks
    for a, i_mask in enumerate(masks):
        for b, j_mask in enumerate(masks):
            common = i_mask & j_mask
            if bin(common).count("1") < 2:
                continue
            low, high = min(members(common)), max(members(common))
            if not (min(members(i_mask)) != low and tree_leq(t, min(members(i_mask)), low)):
                continue
            if not (max(members(j_mask)) != high and tree_leq(t, high, max(members(j_mask)))):
                continue
            window = tree_interval(t, min(members(j_mask)), max(members(i_mask)))
            if not any(common & ~k == 0 and k & ~window == 0 for k in masks):
                return ii.hyperedges[a], ii.hyperedges[b]
    return None


def is_path_intersection_closed(ii: IntreevalHypergraph) -> bool:
    return path_intersection_counterexample(ii) is None


def is_intersection_closed(ii: IntreevalHypergraph) -> bool:
    present = set(ii.hypergraph.masks)
    return all(a & b in present for a, b in combinations(ii.hypergraph.masks, 2)
               if bin(a & b).count("1") >= 2)


# --- звёздная разреженность ---

def star_graph(ii: IntreevalHypergraph, u: int, v: int) -> StarGraph:
    t = ii.tree
    if not tree_leq(t, u, v):
        raise IncomparablePairError(f"Вершины {u} и {v} не удовлетворяют u ≤_T v")
    left = tuple(members(t.in_masks[u]))
    right = tuple(members(t.out_masks[v]))
    edges = set()
    for mask in ii.hypergraph.masks:
        for x in left:
            for y in right:
                if mask >> x & 1 and mask >> y & 1:
                    edges.add((x, y))
    return StarGraph(u, v, left, right, frozenset(edges))


def _ordered_cycle(graph: nx.Graph, cycle: List[int], left: Sequence[int]) -> List[int]:
    """Цикл, начинающийся с наименьшей левой вершины, в сторону меньшего соседа"""
    start = min(x for x in cycle if x in left)
    k = cycle.index(start)
    rotated = cycle[k:] + cycle[:k]
    if len(rotated) > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + list(reversed(rotated[1:]))
    return rotated


def star_sparse_witness(ii: IntreevalHypergraph) -> Optional[Tuple[int, int, List[int]]]:
    """(u, v, цикл) для первого звёздного графа с циклом; None если все ацикличны"""
    t = ii.tree
    for u in t.vertices:
        for v in [u] + members(t.descendant_masks[u]):
            star = star_graph(ii, u, v)
            graph = star.to_networkx()
            if nx.is_forest(graph):
                continue
            cycle = min(nx.cycle_basis(graph), key=lambda c: (len(c), sorted(c)))
            return u, v, _ordered_cycle(graph, cycle, star.left)
    return None


def is_star_sparse(ii: IntreevalHypergraph) -> bool:
    return star_sparse_witness(ii) is None


# --- циклы источников ---

def minimal_cycle_lengths(ii: IntreevalHypergraph, s: Sourcing) -> List[int]:
    """Длины минимальных по включению циклов гиперрёбер"""
    graph = hyperedge_digraph(s)
    cycles = [frozenset(c) for c in nx.simple_cycles(graph)]
    unique = set(cycles)
    minimal = [c for c in unique if not any(other < c for other in unique)]
    return sorted(len(c) for c in minimal)


def long_minimal_cycle(ii: IntreevalHypergraph, limit: Optional[int] = None) -> Optional[Tuple[Sourcing, List[int]]]:
    """Первый источник II с минимальным циклом длины не меньше 3 (перебор всех источников)"""
    for s in enumerate_sourcings(ii.hypergraph, limit):
        if is_acyclic_sourcing(s):
            continue
        lengths = minimal_cycle_lengths(ii, s)
        if any(length != 2 for length in lengths):
            return s, lengths
    return None


def has_two_cycle(s: Sourcing) -> bool:
    graph = hyperedge_digraph(s)
    return any(graph.has_edge(b, a) for a, b in graph.edges)


# --- проекции из Orn(T) ---

def sour_restricted(ii: IntreevalHypergraph, o: Ornamentation) -> Sourcing:
    """Источник пути I из u - наибольшая w ∈ I с u ∈ O(w)"""
    sources = []
    for h in ii.hyperedges:
        start = min(h)
        sources.append(max(w for w in h if o.mask(w) >> start & 1))
    return Sourcing(ii.hypergraph, tuple(sources))


def _require_acyclic(s: Sourcing):
    if not is_acyclic_sourcing(s):
        raise AcyclicityRequiredError(f"Источник {s!r} цикличен")


def minorn(ii: IntreevalHypergraph, s: Sourcing) -> Ornamentation:
    """Объединение по I орнаментаций с O(S(I)) = I ∩ T≤S(I) и одноэлементными остальными"""
    _require_acyclic(s)
    t = ii.tree
    result = minimal_ornamentation(t)
    for h, source in zip(ii.hypergraph.masks, s.sources):
        masks = [1 << w for w in t.vertices]
        masks[source - 1] = h & (t.ancestor_masks[source] | 1 << source)
        result = orn_join(t, result, Ornamentation(t, tuple(masks)))
    return result


def maxorn(ii: IntreevalHypergraph, s: Sourcing) -> Ornamentation:
    """Пересечение по I орнаментаций с O(v) = T≤v ∖ (I ∩ T≤S(I)) при S(I) < v ∈ I, иначе T≤v"""
    _require_acyclic(s)
    t = ii.tree
    result = maximal_ornamentation(t)
    for h, source in zip(ii.hypergraph.masks, s.sources):
        cut = h & (t.ancestor_masks[source] | 1 << source)
        masks = []
        for v in t.vertices:
            down = t.ancestor_masks[v] | 1 << v
            masks.append(down & ~cut if h >> v & 1 and v != source and tree_leq(t, source, v) else down)
        result = orn_meet(t, result, Ornamentation(t, tuple(masks)))
    return result


def sourcing_fiber(ii: IntreevalHypergraph, s: Sourcing) -> List[Ornamentation]:
    return [o for o in enumerate_ornamentations(ii.tree) if sour_restricted(ii, o) == s]


def two_cycle_ornamentation(ii: IntreevalHypergraph) -> Optional[Ornamentation]:
    """Орнаментация, проекция которой на II даёт 2-цикл (таких быть не должно)"""
    for o in enumerate_ornamentations(ii.tree):
        if has_two_cycle(sour_restricted(ii, o)):
            return o
    return None


# --- явные формулы объединения и пересечения ---

def _require_hypotheses(ii: IntreevalHypergraph, sourcings: Sequence[Sourcing]):
    pair = path_intersection_counterexample(ii)
    if pair is not None:
        raise HypothesisError(f"Гиперграф не PIC: {[sorted(h) for h in pair]}")
    witness = star_sparse_witness(ii)
    if witness is not None:
        raise HypothesisError(f"Гиперграф не звёздно разрежен: цикл {witness[2]} при (u,v)={witness[:2]}")
    for s in sourcings:
        if s.hypergraph != ii.hypergraph:
            raise OrnamentError("Источник задан на другом гиперграфе")
        _require_acyclic(s)


def asour_join(ii: IntreevalHypergraph, sourcings: Sequence[Sourcing]) -> Sourcing:
    """(∨S_p)(I) = min(I ∖ ⋃_p ⋃_{J : S_p(J) ∈ I} {v ∈ J : v < S_p(J)})"""
    _require_hypotheses(ii, sourcings)
    masks = ii.hypergraph.masks
    result = []
    for i_mask in masks:
        forbidden = 0
        for s in sourcings:
            for j_mask, source in zip(masks, s.sources):
                if i_mask >> source & 1:
                    forbidden |= j_mask & ((1 << source) - 1)
        result.append(min(members(i_mask & ~forbidden)))
    return Sourcing(ii.hypergraph, tuple(result))


def asour_meet(ii: IntreevalHypergraph, sourcings: Sequence[Sourcing]) -> Sourcing:
    """(∧S_p)(I) = max(I ∖ ⋃_p ⋃_{J : S_p(J) ∈ I} {v ∈ J : v > S_p(J)})"""
    _require_hypotheses(ii, sourcings)
    masks = ii.hypergraph.masks
    result = []
    for i_mask in masks:
        forbidden = 0
        for s in sourcings:
            for j_mask, source in zip(masks, s.sources):
                if i_mask >> source & 1:
                    forbidden |= j_mask & ~((1 << (source + 1)) - 1)
        result.append(max(members(i_mask & ~forbidden)))
    return Sourcing(ii.hypergraph, tuple(result))


# --- квазирешёточное отображение ---

@dataclass
class QuasiLatticeReport:
    sourcings: int = 0
    interval_failures: List[str] = field(default_factory=list)
    crossing_failures: List[str] = field(default_factory=list)
    two_cycles: List[str] = field(default_factory=list)

    @property
    def success(self) -> bool:
        return not (self.interval_failures or self.crossing_failures or self.two_cycles)


def quasi_lattice_check(ii: IntreevalHypergraph) -> QuasiLatticeReport:
    """
    Слои O ↦ sour_restricted(O) - интервалы [minorn, maxorn],
    S1 ≤ S2 влечёт minorn(S1) ≤ maxorn(S2); проекция никогда не даёт 2-цикла.
    """
    report = QuasiLatticeReport()
    everything = enumerate_ornamentations(ii.tree)
    fibers: Dict[Sourcing, List[Ornamentation]] = {}
    for o in everything:
        s = sour_restricted(ii, o)
        fibers.setdefault(s, []).append(o)
        if has_two_cycle(s):
            report.two_cycles.append(repr(o))

    bounds = {}
    for s in acyclic_sourcings(ii.hypergraph, method="permutations"):
        report.sourcings += 1
        low, high = minorn(ii, s), maxorn(ii, s)
        bounds[s] = (low, high)
        interval = {o for o in everything if orn_leq(low, o) and orn_leq(o, high)}
        if interval != set(fibers.get(s, [])):
            report.interval_failures.append(repr(s))

    for s1, (low, _) in bounds.items():
        for s2, (_, high) in bounds.items():
            if sourcing_leq(s1, s2) and not orn_leq(low, high):
                report.crossing_failures.append(f"{s1!r} ≤ {s2!r}")
    return report


# --- характеризация решёточности ---

@dataclass
class CharacterizationReport:
    """Сводка проверки «ASour(II) - решётка ⇔ PIC и звёздная разреженность»"""
    tree: Dict[str, Any]
    total: int = 0
    checked: int = 0
    sampled: bool = False
    complete: bool = True
    lattices: int = 0
    discrepancies: List[Dict[str, Any]] = field(default_factory=list)
    join_mismatches: List[Dict[str, Any]] = field(default_factory=list)
    # нарушения свойств проекции Orn(T) → ASour(II)
    property_failures: List[Dict[str, Any]] = field(default_factory=list)
    quasi_lattice_checked: int = 0
    cycles_checked: int = 0
    cycles_skipped: int = 0

    @property
    def success(self) -> bool:
        return not self.discrepancies and not self.join_mismatches and not self.property_failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tree": self.tree, "total": self.total, "checked": self.checked,
            "sampled": self.sampled, "complete": self.complete, "lattices": self.lattices,
            "discrepancies": self.discrepancies, "join_mismatches": self.join_mismatches,
            "property_failures": self.property_failures,
            "quasi_lattice_checked": self.quasi_lattice_checked,
            "cycles_checked": self.cycles_checked, "cycles_skipped": self.cycles_skipped,
        }


def _property_verdicts(ii: IntreevalHypergraph, pic: bool, sparse: bool, cycle_limit: int) -> Dict[str, Any]:
    """
    Свойства проекции Orn(T) → ASour(II). 2-циклов не бывает никогда. При звёздной
    разреженности все минимальные циклы источников имеют длину 2, а вместе с PIC
    проекция ещё и квазирешёточна.
    None - свойство не проверялось.
    """
    witness = two_cycle_ornamentation(ii)
    verdict: Dict[str, Any] = {
        "no_two_cycles": witness is None,
        "short_cycles_ok": None,
        "quasi_lattice_ok": None,
    }
    if witness is not None:
        verdict["two_cycle_witness"] = repr(witness)
    if sparse and sourcing_count(ii.hypergraph) <= cycle_limit:
        long_cycle = long_minimal_cycle(ii, cycle_limit)
        verdict["short_cycles_ok"] = long_cycle is None
        if long_cycle is not None:
            verdict["long_cycle"] = {"sourcing": repr(long_cycle[0]), "lengths": long_cycle[1]}
    if pic and sparse:
        verdict["quasi_lattice_ok"] = quasi_lattice_check(ii).success
    return verdict


def check_subhypergraph(ii: IntreevalHypergraph, cycle_limit: Optional[int] = None) -> Dict[str, Any]:
    """Вердикты для одного подгиперграфа: решётка, PIC, звёздная разреженность, формула и свойства проекции"""
    poset = asour_poset(ii.hypergraph, method="permutations")
    lattice = poset.is_lattice()
    pic = is_path_intersection_closed(ii)
    sparse = is_star_sparse(ii)
    limit = cycle_limit if cycle_limit is not None else get_config().MAX_CYCLE_SOURCINGS
    verdict = {
        "hyperedges": [sorted(h) for h in ii.hyperedges],
        "lattice": lattice, "pic": pic, "star_sparse": sparse,
        "join_formula_ok": None,
    }
    verdict.update(_property_verdicts(ii, pic, sparse, limit))
    if lattice and pic and sparse:
        ok = True
        elements = poset.elements
        for a, b in combinations(elements, 2):
            if asour_join(ii, [a, b]) != poset.join(a, b) or asour_meet(ii, [a, b]) != poset.meet(a, b):
                ok = False
                break
        verdict["join_formula_ok"] = ok
    return verdict


def characterization_check(t: Digraph, sample: Optional[int] = None, seed: int = 0,
                           time_budget: Optional[float] = None) -> CharacterizationReport:
    """
    Перебор подгиперграфов P(T) в порядке кода Грея. Если гиперрёбер
    больше порога, нужен размер выборки (sample) и seed.
    """
    config = get_config()
    paths = path_hypergraph(t).hyperedges
    total = 1 << len(paths)
    report = CharacterizationReport(tree=t.to_dict(), total=total)

    if len(paths) > config.INTREEVAL_EXHAUSTIVE_EDGES:
        if sample is None:
            raise BudgetExceededError("подгиперграфы P(T)", total, 1 << config.INTREEVAL_EXHAUSTIVE_EDGES)
        rng = random.Random(seed)
        codes = sorted(rng.sample(range(total), min(sample, total)))
        report.sampled = True
    else:
        codes = [i ^ (i >> 1) for i in range(total)]

    budget = time_budget if time_budget is not None else config.INTREEVAL_TIME_BUDGET
    started = time.monotonic()
    for code in codes:
        if time.monotonic() - started > budget:
            report.complete = False
            logger.warning(f"Бюджет времени исчерпан: проверено {report.checked} из {len(codes)}")
            break
        chosen = [paths[i] for i in range(len(paths)) if code >> i & 1]
        ii = IntreevalHypergraph(t, Hypergraph(t.n, tuple(chosen)))
        verdict = check_subhypergraph(ii)
        report.checked += 1
        report.lattices += verdict["lattice"]
        if verdict["lattice"] != (verdict["pic"] and verdict["star_sparse"]):
            report.discrepancies.append(verdict)
        if verdict["join_formula_ok"] is False:
            report.join_mismatches.append(verdict)
        if verdict["quasi_lattice_ok"] is not None:
            report.quasi_lattice_checked += 1
        if verdict["short_cycles_ok"] is not None:
            report.cycles_checked += 1
        elif verdict["star_sparse"]:
            report.cycles_skipped += 1
        if False in (verdict["no_two_cycles"], verdict["short_cycles_ok"], verdict["quasi_lattice_ok"]):
            report.property_failures.append(verdict)
    if report.cycles_skipped:
        logger.info(f"Минимальные циклы не проверены для {report.cycles_skipped} подгиперграфов (много источников)")
    return report
