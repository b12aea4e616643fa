"""Интривальные гиперграфы: решётка ⇔ PIC и звёздная разреженность"""

import logging
from functools import partial
from typing import List

from config import get_config
from graphs.digraph import Digraph, path_hypergraph
from graphs.trees import increasing_trees
from reports.report import CheckRecord, VerificationReport
from structures.intreeval import characterization_check
from suites.base_suite import BaseSuite, instance_key, timed_check

logger = logging.getLogger(__name__)


def _characterization(t: Digraph, seed: int):
    config = get_config()
    sample = None
    if len(path_hypergraph(t)) > config.INTREEVAL_EXHAUSTIVE_EDGES:
        sample = config.INTREEVAL_SAMPLE_SIZE
    report = characterization_check(t, sample=sample, seed=seed)
    witness = None
    if not report.success:
        witness = {
            "discrepancies": report.discrepancies[:3],
            "join_mismatches": report.join_mismatches[:3],
            "property_failures": report.property_failures[:3],
        }
    elif not report.complete or report.cycles_skipped:
        witness = {"checked": report.checked, "total": report.total, "complete": report.complete,
                   "cycles_skipped": report.cycles_skipped}
    return report.success, witness


def check_tree(t: Digraph, seed: int = 0) -> List[CheckRecord]:
    key = instance_key(t)
    return [timed_check("lattice_iff_pic_and_sparse", key, lambda: _characterization(t, seed))]


class IntreevalSuite(BaseSuite):
    def __init__(self):
        super().__init__("intreeval")

    def run(self, bound: int, seed: int = 0) -> VerificationReport:
        config = get_config()
        report = VerificationReport(self.name, {"n": bound, "seed": seed})
        # все возрастающие нумерации: гиперграф путей зависит от нумерации
        trees = [t for n in range(2, bound + 1) for t in increasing_trees(n)]
        sampled = [t for t in trees if len(path_hypergraph(t)) > config.INTREEVAL_EXHAUSTIVE_EDGES]
        report.coverage["trees"] = len(trees)
        report.coverage["sampled_trees"] = len(sampled)
        if sampled:
            report.coverage["sample_size"] = config.INTREEVAL_SAMPLE_SIZE
            logger.info(f"Выборочная проверка для {len(sampled)} деревьев (seed={seed})")
        self.collect(report, partial(check_tree, seed=seed), trees)
        return report
