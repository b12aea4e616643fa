"""Геометрическая реализация: ориентированные скелеты многогранника и зонотопа"""

import logging
from typing import List

from errors import SizeGuardError
from graphs.digraph import Digraph, classify_tree
from graphs.trees import all_directed_trees
from polytope.hypergraphic import realization_check, zonotope_covers_match
from reports.report import CheckRecord, VerificationReport
from suites.base_suite import BaseSuite, instance_key, timed_check

logger = logging.getLogger(__name__)


def _realization(t: Digraph):
    report = realization_check(t)
    return report.success, None if report.success else report.to_dict()


def _zonotope(t: Digraph):
    points, ok = zonotope_covers_match(t)
    return ok, None if ok else {"points": points}


def check_tree(t: Digraph) -> List[CheckRecord]:
    """Деревья, чьи многогранники больше предела, пропускаются"""
    key = instance_key(t)
    records = []
    try:
        records.append(timed_check("zonotope_skeleton_is_hasse", key, lambda: _zonotope(t)))
        if not classify_tree(t).starred:
            records.append(timed_check("polytope_realizes_orn", key, lambda: _realization(t)))
    except SizeGuardError as e:
        logger.info(f"Пропуск {key}: {e}")
    return records


class RealizationSuite(BaseSuite):
    def __init__(self):
        super().__init__("realization")

    def run(self, bound: int, seed: int = 0) -> VerificationReport:
        report = VerificationReport(self.name, {"n": bound})
        trees = all_directed_trees(bound)
        self.collect(report, check_tree, trees)
        report.coverage["trees"] = len(trees)
        report.coverage["checked_trees"] = len({r.instance for r in report.records})
        return report
