"""
Точные числа орнаментаций метёл и гребёнок: рекуррентности, замкнутые
формулы и сверка с прямым перебором.
"""

import csv
import io
import logging
from dataclasses import dataclass, field, asdict
from functools import lru_cache
from math import comb as binomial, factorial, prod
from typing import Dict, Any, List, Optional

from graphs.digraph import Digraph, path_hypergraph, transitive_closure
from graphs.fixtures import broom, comb, comb_minus_bottom
from structures.ornament import enumerate_ornamentations
from structures.reorient import acyclic_reorientations, all_reorientations
from structures.sourcing import enumerate_sourcings

logger = logging.getLogger(__name__)

# Начало последовательности для гребёнки без нижнего зуба
COMB_MINUS_BOTTOM_QUOTED = (1, 4, 26, 226, 2426, 30826, 451586)


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    return binomial(2 * n, n) // (n + 1)


def double_factorial_odd(k: int) -> int:
    """(2k−1)!! = (2k)! / (2^k k!)"""
    return factorial(2 * k) // (2 ** k * factorial(k))


@lru_cache(maxsize=None)
def broom_count(m: int, n: int) -> int:
    """B_{m,n} = Σ_k Σ_{ℓ=1..n} C(m,k) C_{n−ℓ} B_{k,ℓ−1}, B_{m,0} = 1"""
    if m < 0 or n < 0:
        raise ValueError(f"Отрицательные параметры метлы: ({m}, {n})")
    if n == 0:
        return 1
    return sum(binomial(m, k) * catalan(n - l) * broom_count(k, l - 1)
               for k in range(m + 1) for l in range(1, n + 1))


@lru_cache(maxsize=None)
def comb_count(n: int) -> int:
    """E_n = (2n+1)!! − Σ_{k=1..n} (2k−1)!! E_{n−k}"""
    if n < 0:
        raise ValueError(f"Отрицательный размер гребёнки: {n}")
    return double_factorial_odd(n + 1) - sum(double_factorial_odd(k) * comb_count(n - k)
                                             for k in range(1, n + 1))


def broom_table(max_m: int, max_n: int) -> List[List[int]]:
    return [[broom_count(m, n) for n in range(max_n + 1)] for m in range(max_m + 1)]


def broom_column(n: int, rows: int) -> List[int]:
    """Столбец n таблицы: B_{0,n}, …, B_{rows−1,n}"""
    return [broom_count(m, n) for m in range(rows)]


def broom_table_csv(max_m: int, max_n: int) -> str:
    """CSV в раскладке таблицы: строка на m, столбец на n"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["m\\n"] + list(range(max_n + 1)))
    for m, row in enumerate(broom_table(max_m, max_n)):
        writer.writerow([m] + row)
    return buffer.getvalue()


def comb_minus_bottom_count(n: int) -> int:
    """Перебором: число орнаментаций n-гребёнки без вершины 1"""
    return len(enumerate_ornamentations(comb_minus_bottom(n)))


# --- замкнутые формулы ---

def broom_closed_forms(m: int, n: int) -> Dict[str, int]:
    return {
        "reorientations": 2 ** (n * (2 * m + n - 1) // 2),
        "acyclic_reorientations": factorial(n) * (n + 1) ** m,
        "sourcings": factorial(n + 1) ** m * prod(k ** (n + 1 - k) for k in range(1, n + 1)),
    }


def comb_closed_forms(n: int) -> Dict[str, int]:
    return {
        "reorientations": 2 ** (n * n),
        "acyclic_reorientations": factorial(n) * factorial(n + 1),
        "sourcings": prod(k ** (n + 1 - k) * factorial(k + 1) for k in range(1, n + 1)),
    }


@dataclass
class ClosedFormReport:
    family: str
    parameters: List[int]
    expected: Dict[str, int] = field(default_factory=dict)
    observed: Dict[str, int] = field(default_factory=dict)

    @property
    def mismatches(self) -> List[str]:
        return [key for key in self.expected if self.expected[key] != self.observed.get(key)]

    @property
    def success(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> Dict[str, Any]:
        return {**asdict(self), "success": self.success}


def _brute_counts(t: Digraph) -> Dict[str, int]:
    closure = transitive_closure(t)
    return {
        "reorientations": len(all_reorientations(closure)),
        "acyclic_reorientations": len(acyclic_reorientations(closure)),
        "sourcings": len(enumerate_sourcings(path_hypergraph(t))),
        "ornamentations": len(enumerate_ornamentations(t)),
    }


def closed_form_counts(family: str, n: int, m: Optional[int] = None) -> ClosedFormReport:
    """Сверка |Reori(tc T)|, |AReori(tc T)|, |Sour(P T)| и |Orn T| с формулами для метлы или гребёнки"""
    if family == "broom":
        if m is None:
            raise ValueError("Для метлы нужен параметр m")
        t = broom(m, n)
        expected = {**broom_closed_forms(m, n), "ornamentations": broom_count(m, n)}
        parameters = [m, n]
    elif family == "comb":
        t = comb(n)
        expected = {**comb_closed_forms(n), "ornamentations": comb_count(n)}
        parameters = [n]
    else:
        raise ValueError(f"Неизвестное семейство: {family}")

    report = ClosedFormReport(family, parameters, expected, _brute_counts(t))
    if not report.success:
        logger.warning(f"{family}{parameters}: расхождения в {report.mismatches}")
    return report
