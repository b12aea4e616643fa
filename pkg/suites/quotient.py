"""Деревья без звезды: R ↦ orn{R} - гомоморфизм решёток, AOrn = Orn"""

from typing import List

from graphs.digraph import Digraph, classify_tree, transitive_closure
from graphs.trees import all_directed_trees
from reports.report import CheckRecord, VerificationReport
from structures.ornament import acyclic_ornamentations, enumerate_ornamentations
from structures.reorient import closed_reorientations, is_acyclic_reorientation, quotient_check_unstarred
from structures.sourcing import asour_aorn_isomorphism_check
from suites.base_suite import BaseSuite, instance_key, record_tree_coverage, timed_check


def _quotient(t: Digraph):
    report = quotient_check_unstarred(t)
    witness = None
    if not report.success:
        failures = report.meet_failures + report.join_failures + report.closed_meet_failures
        witness = [repr(pair) for pair in failures[:3]]
    return report.success, witness


def _aorn_is_orn(t: Digraph):
    acyclic = {o.masks for o in acyclic_ornamentations(t, brute_force=True)}
    everything = {o.masks for o in enumerate_ornamentations(t)}
    if acyclic == everything:
        return True, None
    return False, f"{len(acyclic)} ≠ {len(everything)}"


def _biclosed_acyclic(t: Digraph):
    biclosed = closed_reorientations(transitive_closure(t), closed=True, coclosed=True)
    cyclic = [r for r in biclosed if not is_acyclic_reorientation(r)]
    return not cyclic, repr(cyclic[0]) if cyclic else None


def _isomorphism(t: Digraph):
    check = asour_aorn_isomorphism_check(t, brute_force=True)
    return check.success, check.witnesses[:3] or None


def check_tree(t: Digraph) -> List[CheckRecord]:
    key = instance_key(t)
    records = [timed_check("asour_aorn_isomorphism", key, lambda: _isomorphism(t))]
    if not classify_tree(t).starred:
        records.extend([
            timed_check("orn_lattice_map", key, lambda: _quotient(t)),
            timed_check("aorn_equals_orn", key, lambda: _aorn_is_orn(t)),
            timed_check("biclosed_are_acyclic", key, lambda: _biclosed_acyclic(t)),
        ])
    return records


class QuotientSuite(BaseSuite):
    def __init__(self):
        super().__init__("quotient")

    def run(self, bound: int, seed: int = 0) -> VerificationReport:
        report = VerificationReport(self.name, {"n": bound})
        trees = all_directed_trees(bound)
        record_tree_coverage(report, trees, bound)
        report.coverage["unstarred"] = sum(1 for t in trees if not classify_tree(t).starred)
        self.collect(report, check_tree, trees)
        return report
