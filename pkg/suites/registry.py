import logging
from typing import Dict, List, Optional, Type

from reports.report import VerificationReport
from suites.base_suite import BaseSuite
from suites.counts import CountsSuite
from suites.fixtures import FixturesSuite
from suites.intreeval import IntreevalSuite
from suites.macneille import MacNeilleSuite
from suites.quotient import QuotientSuite
from suites.realization import RealizationSuite
from suites.starred import StarredSuite
from suites.trees import TreesSuite

logger = logging.getLogger(__name__)

SUITES: Dict[str, Type[BaseSuite]] = {
    "macneille": MacNeilleSuite,
    "quotient": QuotientSuite,
    "intreeval": IntreevalSuite,
    "realization": RealizationSuite,
    "trees": TreesSuite,
    "starred": StarredSuite,
    "counts": CountsSuite,
    "fixtures": FixturesSuite,
}


def suite_names() -> List[str]:
    return list(SUITES) + ["all"]


def create_suite(name: str) -> BaseSuite:
    if name not in SUITES:
        raise KeyError(f"Неизвестный набор: {name}")
    return SUITES[name]()


def run_suite(name: str, bound: int, seed: int = 0, only: Optional[List[str]] = None) -> VerificationReport:
    """Один набор или все наборы ("all") с общим отчётом"""
    if name != "all":
        return create_suite(name).execute(bound, seed)

    report = VerificationReport("all", {"n": bound, "seed": seed})
    for suite_name in only or SUITES:
        logger.info(f"▶ Набор {suite_name}")
        report.extend(create_suite(suite_name).execute(bound, seed))
    report.sort()
    return report
