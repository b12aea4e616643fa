"""Пополнения Макнейла: AReori(tc T) → Rbi(tc T) и ASour(P T) → Orn(T)"""

from typing import List

from graphs.digraph import Digraph, path_hypergraph, transitive_closure
from graphs.trees import all_directed_trees
from posets.completion import irreducible_core, macneille_completion
from posets.isomorphism import poset_isomorphic
from reports.report import CheckRecord, VerificationReport
from structures.ornament import orn_poset
from structures.reorient import areori_poset, rbi_poset
from structures.sourcing import asour_poset
from suites.base_suite import BaseSuite, instance_key, record_tree_coverage, timed_check


def _completion_matches(source, target):
    completion, _ = macneille_completion(source)
    result = poset_isomorphic(completion, target)
    witness = None if result else f"|пополнение| = {len(completion)}, |цель| = {len(target)}"
    return result.isomorphic, witness


def check_tree(t: Digraph) -> List[CheckRecord]:
    key = instance_key(t)
    closure = transitive_closure(t)
    orn = orn_poset(t)
    return [
        timed_check("macneille_areori_rbi", key,
                    lambda: _completion_matches(areori_poset(closure), rbi_poset(closure))),
        timed_check("macneille_asour_orn", key,
                    lambda: _completion_matches(asour_poset(path_hypergraph(t)), orn)),
        timed_check("macneille_irreducible_core", key,
                    lambda: _completion_matches(irreducible_core(orn), orn)),
    ]


class MacNeilleSuite(BaseSuite):
    def __init__(self):
        super().__init__("macneille")

    def run(self, bound: int, seed: int = 0) -> VerificationReport:
        report = VerificationReport(self.name, {"n": bound})
        trees = all_directed_trees(bound)
        record_tree_coverage(report, trees, bound)
        self.collect(report, check_tree, trees)
        return report
