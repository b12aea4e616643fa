"""Перечисление: таблица метёл, гребёнки, замкнутые формулы, ряды, биекции"""

from typing import Callable, Dict, List, Tuple

from enumeration.bijections import comb_bijections
from enumeration.counts import (COMB_MINUS_BOTTOM_QUOTED, broom_column, broom_count, broom_table,
                                catalan, closed_form_counts, comb_count, comb_minus_bottom_count)
from enumeration.series import broom_series_checks
from graphs.fixtures import broom, comb, increasing_path
from reports.report import CheckRecord, VerificationReport
from structures.ornament import enumerate_ornamentations
from suites.base_suite import BaseSuite, timed_check

# |Orn| метлы: строка m, столбец n
BROOM_TABLE = (
    (1, 1, 2, 5, 14, 42, 132, 429, 1430),
    (1, 2, 5, 14, 42, 132, 429, 1430, 4862),
    (1, 4, 13, 42, 138, 462, 1573, 5434, 19006),
    (1, 8, 35, 134, 492, 1782, 6435, 23270, 84422),
    (1, 16, 97, 450, 1878, 7458, 28873, 110266, 418030),
    (1, 32, 275, 1574, 7572, 33342, 139659, 567590, 2263142),
    (1, 64, 793, 5682, 31878, 157122, 717673, 3124474, 13177006),
    (1, 128, 2315, 21014, 138852, 772302, 3872955, 18167270, 81443702),
    (1, 256, 6817, 79170, 621318, 3927378, 21752953, 110506426, 528949870),
)

COMB_SEQUENCE = (1, 2, 10, 74, 706, 8162, 110410, 1708394)

# Пределы прямого перебора
BRUTE_BROOM = (3, 4)
BRUTE_COMB = 3
BRUTE_COMB_MINUS_BOTTOM = 5
CLOSED_FORM_VERTICES = 6


def _broom_table(bound: int):
    table = broom_table(8, 8)
    mismatches = [(m, n) for m in range(9) for n in range(9) if table[m][n] != BROOM_TABLE[m][n]]
    return not mismatches, mismatches[:5] or None


def _broom_brute(bound: int):
    max_m, max_n = BRUTE_BROOM
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            if m + n > bound or m + n == 0:
                continue
            found = len(enumerate_ornamentations(broom(m, n)))
            if found != broom_count(m, n):
                return False, {"m": m, "n": n, "brute": found, "recurrence": broom_count(m, n)}
    return True, None


def _broom_column(bound: int):
    column = broom_column(1, len(BROOM_TABLE))
    ok = column == [2 ** m for m in range(len(column))]
    return ok, None if ok else column


def _comb_sequence(bound: int):
    values = [comb_count(n) for n in range(len(COMB_SEQUENCE))]
    ok = tuple(values) == COMB_SEQUENCE
    for n in range(1, min(BRUTE_COMB, bound // 2) + 1):
        found = len(enumerate_ornamentations(comb(n)))
        if found != values[n]:
            return False, {"n": n, "brute": found, "recurrence": values[n]}
    return ok, None if ok else values


def _comb_minus_bottom(bound: int):
    sizes = range(1, min(BRUTE_COMB_MINUS_BOTTOM, (bound + 1) // 2) + 1)
    found = [comb_minus_bottom_count(n) for n in sizes]
    expected = list(COMB_MINUS_BOTTOM_QUOTED[:len(found)])
    return found == expected, None if found == expected else found


def _path_catalan(bound: int):
    for n in range(1, min(bound, 8) + 1):
        found = len(enumerate_ornamentations(increasing_path(n)))
        if found != catalan(n):
            return False, {"n": n, "found": found}
    return True, None


def _closed_forms(bound: int):
    limit = min(bound, CLOSED_FORM_VERTICES)
    reports = [closed_form_counts("broom", n, m) for m in range(4) for n in range(1, 4) if m + n <= limit]
    reports += [closed_form_counts("comb", n) for n in range(1, limit // 2 + 1)]
    failed = [r.to_dict() for r in reports if not r.success]
    return not failed, failed[:3] or None


def _series(bound: int):
    report = broom_series_checks(6, 8)
    return report.success, None if report.success else report.to_dict()


def _bijections(bound: int):
    reports = [comb_bijections(n) for n in range(1, min(3, bound // 2) + 1)]
    failed = [r.to_dict() for r in reports if not r.success]
    return not failed, failed or None


CHECKS: Dict[str, Callable[[int], Tuple[bool, object]]] = {
    "broom_table": _broom_table,
    "broom_brute_force": _broom_brute,
    "broom_column_powers": _broom_column,
    "comb_sequence": _comb_sequence,
    "comb_minus_bottom": _comb_minus_bottom,
    "path_catalan": _path_catalan,
    "closed_forms": _closed_forms,
    "broom_series": _series,
    "comb_bijections": _bijections,
}


def run_check(item: Tuple[str, int]) -> List[CheckRecord]:
    name, bound = item
    return [timed_check(name, f"n≤{bound}", lambda: CHECKS[name](bound))]


class CountsSuite(BaseSuite):
    def __init__(self):
        super().__init__("counts")

    def run(self, bound: int, seed: int = 0) -> VerificationReport:
        report = VerificationReport(self.name, {"n": bound})
        report.coverage["checks"] = len(CHECKS)
        self.collect(report, run_check, [(name, bound) for name in CHECKS])
        return report
