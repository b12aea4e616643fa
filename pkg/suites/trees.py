"""Решётка Orn(T) для деревьев: полудистрибутивность, неразложимые, κ"""

from typing import List

from config import get_config
from graphs.digraph import Digraph
from graphs.trees import all_directed_trees
from posets.lattice import (is_join_semidistributive, is_meet_semidistributive, kappa_join,
                            kappa_meet, semidistributivity_conditions_agree)
from reports.report import CheckRecord, VerificationReport
from structures.ornament import enumerate_ornamentations, jp, mp, orn_poset, tree_paths
from suites.base_suite import BaseSuite, instance_key, record_tree_coverage, timed_check


def _semidistributive(p):
    join_sd, meet_sd = is_join_semidistributive(p), is_meet_semidistributive(p)
    ok = join_sd and meet_sd
    return ok, None if ok else {"join": join_sd, "meet": meet_sd}


def _definitions_agree(p):
    return semidistributivity_conditions_agree(p), None


def _irreducibles(t: Digraph, p):
    paths = tree_paths(t)
    joins = {jp(t, path) for path in paths}
    meets = {mp(t, path) for path in paths}
    ok = set(p.join_irreducibles()) == joins and set(p.meet_irreducibles()) == meets
    return ok, None if ok else {"paths": len(paths), "join_irreducibles": len(p.join_irreducibles()),
                                "meet_irreducibles": len(p.meet_irreducibles())}


def _kappa_inverse(p):
    for m in p.meet_irreducibles():
        if kappa_meet(p, kappa_join(p, m)) != m:
            return False, repr(m)
    for j in p.join_irreducibles():
        if kappa_join(p, kappa_meet(p, j)) != j:
            return False, repr(j)
    return True, None


def check_tree(t: Digraph) -> List[CheckRecord]:
    key = instance_key(t)
    p = orn_poset(t)
    records = [
        timed_check("orn_semidistributive", key, lambda: _semidistributive(p)),
        timed_check("irreducibles_are_paths", key, lambda: _irreducibles(t, p)),
        timed_check("kappa_inverse", key, lambda: _kappa_inverse(p)),
    ]
    if len(p) <= get_config().MAX_TRIPLE_CHECK:
        records.append(timed_check("semidistributivity_definitions_agree", key, lambda: _definitions_agree(p)))
    return records


class TreesSuite(BaseSuite):
    def __init__(self):
        super().__init__("trees")

    def run(self, bound: int, seed: int = 0) -> VerificationReport:
        report = VerificationReport(self.name, {"n": bound})
        trees = all_directed_trees(bound)
        record_tree_coverage(report, trees, bound)
        limit = get_config().MAX_TRIPLE_CHECK
        skipped = sum(1 for t in trees if len(enumerate_ornamentations(t)) > limit)
        report.coverage["triple_check_skipped"] = skipped
        if skipped:
            self.logger.info(f"Проверка по тройкам пропущена для {skipped} деревьев (> {limit} элементов)")
        self.collect(report, check_tree, trees)
        return report
