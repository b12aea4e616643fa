"""Проверки на фиксированных графах каталога и известных контрпримерах"""

from typing import Callable, Dict, List, Tuple

from graphs.digraph import Digraph, mask_of, path_hypergraph, transitive_closure
from graphs.fixtures import diamond, fixture, graph_r, pentagon_with_chord, star_tree_x
from posets.completion import macneille_completion
from reports.report import CheckRecord, VerificationReport
from structures.intreeval import (IntreevalHypergraph, is_path_intersection_closed, is_star_sparse,
                                  star_sparse_witness)
from structures.ornament import (aorn_poset, cyclic_ornamentations, minimal_ornamentation, orn_join,
                                 orn_meet)
from structures.reorient import (Reorientation, fiber_extrema, is_acyclic_reorientation,
                                 orn_of_reorientation, rbi_poset, reorientation_cycle)
from structures.sourcing import (areori_of_sourcing, asour_of_permutation, is_acyclic_sourcing,
                                 make_sourcing, reori_of_sourcing)
from suites.base_suite import BaseSuite, timed_check

# Дерево 13, 23, 34, 45, 46 и его пути
SPLIT_TREE = Digraph(6, frozenset({(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)}))
CROSSING_PAIR = ({1, 3, 4, 5}, {2, 3, 4, 6})
CROSSING_TABLE = (
    ("314625", 3, 3), ("146325", 1, 4), ("631425", 3, 6),
    ("463125", 4, 4), ("164325", 1, 6), ("163425", 1, 6),
)
STAR_CYCLE_EDGES = ({1, 3, 4, 5}, {2, 3, 4, 5}, {2, 3, 4, 6}, {1, 3, 4, 6})
STAR_CYCLE_TABLE = (("152634", (1, 5, 2, 1)), ("261534", (1, 2, 2, 6)))

R_SOURCES = {(1, 3): 3, (1, 3, 4): 3, (1, 5): 5, (2, 4): 4, (2, 5): 2, (3, 4): 3}


def _sourcing_of_r(overrides=None):
    choice = dict(R_SOURCES)
    choice.update(overrides or {})
    return make_sourcing(path_hypergraph(graph_r()), {frozenset(k): v for k, v in choice.items()})


def _cyclic_counts():
    x, d = len(cyclic_ornamentations(star_tree_x())), len(cyclic_ornamentations(diamond()))
    return (x, d) == (2, 4), {"X": x, "D": d}


def _rbi_diamond():
    lattice = rbi_poset(transitive_closure(diamond())).is_lattice()
    return not lattice, None


def _completion_growth():
    p = aorn_poset(diamond())
    completion, _ = macneille_completion(p)
    return len(completion) == len(p) + 2, {"aorn": len(p), "completion": len(completion)}


def _areori_of_sourcing():
    r = graph_r()
    first = areori_of_sourcing(r, _sourcing_of_r()).rev
    second = areori_of_sourcing(r, _sourcing_of_r({(2, 5): 5})).rev
    ok = (first == {(1, 3), (1, 4), (1, 5), (2, 4)} and second == {(1, 3), (1, 5), (2, 4), (2, 5)})
    return ok, None if ok else {"first": sorted(first), "second": sorted(second)}


def _reori_cycle():
    s = _sourcing_of_r()
    r = reori_of_sourcing(graph_r(), s)
    ok = is_acyclic_sourcing(s) and r.rev == {(1, 3), (1, 5), (2, 4)} and not is_acyclic_reorientation(r)
    return ok, reorientation_cycle(r)


def _union_and_intersection():
    path = fixture("I3")
    ambient = transitive_closure(path)

    def orn(*edges):
        return orn_of_reorientation(path, Reorientation(ambient, frozenset(edges)))

    union = orn((1, 3), (2, 3))
    joined = orn_join(path, orn((1, 3)), orn((2, 3)))
    join_breaks = union.mask(3) == mask_of([1, 2, 3]) and joined.mask(3) == mask_of([2, 3])

    intersection = orn((2, 3))
    met = orn_meet(path, orn((1, 2), (2, 3)), orn((1, 3), (2, 3)))
    meet_breaks = (intersection.mask(3) == mask_of([2, 3]) and met.mask(2) == mask_of([2])
                   and met.mask(3) == mask_of([1, 2, 3]))
    return join_breaks and meet_breaks, {"join": repr(joined), "meet": repr(met)}


def _fiber_two_maxima():
    d = pentagon_with_chord()
    extrema = fiber_extrema(d, minimal_ornamentation(d))
    return len(extrema.maxima) == 2, [repr(r) for r in extrema.maxima]


def _crossing_pair():
    ii = IntreevalHypergraph.of(SPLIT_TREE, CROSSING_PAIR)
    first, second = (frozenset(h) for h in CROSSING_PAIR)
    for perm, s_first, s_second in CROSSING_TABLE:
        s = asour_of_permutation(ii.hypergraph, [int(c) for c in perm])
        if (s(first), s(second)) != (s_first, s_second):
            return False, {"perm": perm, "sourcing": repr(s)}
    ok = is_star_sparse(ii) and not is_path_intersection_closed(ii)
    return ok, None


def _star_cycle():
    ii = IntreevalHypergraph.of(SPLIT_TREE, STAR_CYCLE_EDGES)
    for perm, expected in STAR_CYCLE_TABLE:
        s = asour_of_permutation(ii.hypergraph, [int(c) for c in perm])
        if tuple(s(frozenset(h)) for h in STAR_CYCLE_EDGES) != expected:
            return False, {"perm": perm, "sourcing": repr(s)}
    witness = star_sparse_witness(ii)
    ok = is_path_intersection_closed(ii) and witness == (3, 4, [1, 5, 2, 6])
    return ok, witness


CHECKS: Dict[str, Callable[[], Tuple[bool, object]]] = {
    "cyclic_ornamentation_counts": _cyclic_counts,
    "rbi_diamond_not_lattice": _rbi_diamond,
    "aorn_diamond_completion": _completion_growth,
    "areori_of_sourcing": _areori_of_sourcing,
    "reori_of_acyclic_sourcing_cyclic": _reori_cycle,
    "orn_breaks_union_and_intersection": _union_and_intersection,
    "fiber_with_two_maxima": _fiber_two_maxima,
    "sparse_without_pic": _crossing_pair,
    "pic_without_sparsity": _star_cycle,
}


def run_check(name: str) -> List[CheckRecord]:
    return [timed_check(name, "fixture", CHECKS[name])]


class FixturesSuite(BaseSuite):
    def __init__(self):
        super().__init__("fixtures")

    def run(self, bound: int, seed: int = 0) -> VerificationReport:
        report = VerificationReport(self.name, {})
        report.coverage["checks"] = len(CHECKS)
        self.collect(report, run_check, list(CHECKS))
        return report
