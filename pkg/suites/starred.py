"""Восемь равносильных признаков дерева со звездой"""

from typing import Dict, List

from graphs.digraph import (Digraph, classify_tree, five_vertex_configuration,
                            has_induced_alternating_cycle, path_hypergraph, transitive_closure)
from graphs.trees import all_directed_trees
from reports.report import CheckRecord, VerificationReport
from structures.ornament import aorn_poset, cyclic_ornamentations
from structures.reorient import (areori_is_lattice, areori_poset, closed_reorientations,
                                 is_acyclic_reorientation)
from structures.sourcing import asour_poset
from suites.base_suite import BaseSuite, instance_key, record_tree_coverage, timed_check


def starred_conditions(t: Digraph) -> Dict[str, bool]:
    closure = transitive_closure(t)
    biclosed = closed_reorientations(closure, closed=True, coclosed=True)
    return {
        "alternating_cycle": has_induced_alternating_cycle(closure) is not None,
        "five_vertices": five_vertex_configuration(t) is not None,
        "starred": classify_tree(t).starred,
        "cyclic_biclosed": any(not is_acyclic_reorientation(r) for r in biclosed),
        "cyclic_ornamentation": bool(cyclic_ornamentations(t, brute_force=True)),
        "areori_not_lattice": not areori_poset(closure).is_lattice(),
        "asour_not_lattice": not asour_poset(path_hypergraph(t)).is_lattice(),
        "aorn_not_lattice": not aorn_poset(t, brute_force=True).is_lattice(),
    }


def _conditions_agree(t: Digraph):
    verdicts = starred_conditions(t)
    agree = len(set(verdicts.values())) == 1
    return agree, None if agree else verdicts


def _criterion_matches(t: Digraph):
    closure = transitive_closure(t)
    by_criterion, by_order = areori_is_lattice(closure), areori_poset(closure).is_lattice()
    return by_criterion == by_order, None if by_criterion == by_order else {"criterion": by_criterion}


def check_tree(t: Digraph) -> List[CheckRecord]:
    key = instance_key(t)
    return [
        timed_check("starred_conditions_agree", key, lambda: _conditions_agree(t)),
        timed_check("areori_forest_criterion", key, lambda: _criterion_matches(t)),
    ]


class StarredSuite(BaseSuite):
    def __init__(self):
        super().__init__("starred")

    def run(self, bound: int, seed: int = 0) -> VerificationReport:
        report = VerificationReport(self.name, {"n": bound})
        trees = all_directed_trees(bound)
        record_tree_coverage(report, trees, bound)
        self.collect(report, check_tree, trees)
        return report
