"""
Симплекс-таблица над Fraction: правило Бленда, первая фаза
для проверки допустимости системы A·λ = b, λ ≥ 0.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

logger = logging.getLogger(__name__)


class SimplexTableau:
    """
    Словарная форма: базисная переменная строки i равна
    b[i] − Σ_j A[i][j] · (небазисная j). Цель Σ_j c[j] · (небазисная j) максимизируется.
    """

    def __init__(self, m: int, n: int):
        self.m = m
        self.n = n
        self.A: List[List[Fraction]] = [[Fraction(0)] * n for _ in range(m)]
        self.b: List[Fraction] = [Fraction(0)] * m
        self.c: List[Fraction] = [Fraction(0)] * n
        self.nb_vars = list(range(n))
        self.b_vars = list(range(n, n + m))
        self.pivots = 0

    def pivot(self, i: int, j: int):
        piv = self.A[i][j]
        delta = self.c[j] / piv
        for l in range(self.n):
            self.c[l] -= delta * self.A[i][l]
        self.c[j] = -delta

        for l in range(self.n):
            self.A[i][l] = 1 / piv if l == j else self.A[i][l] / piv
        self.b[i] /= piv

        for k in range(self.m):
            if k == i:
                continue
            f = self.A[k][j]
            if not f:
                continue
            for l in range(self.n):
                self.A[k][l] = -f / piv if l == j else self.A[k][l] - f * self.A[i][l]
            self.b[k] -= f * self.b[i]

        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def bland_primal_step(self) -> str:
        try:
            _, j = min((self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0)
        except ValueError:
            return "optimal"
        try:
            _, _, i = min((self.b[i] / self.A[i][j], self.b_vars[i], i)
                          for i in range(self.m) if self.A[i][j] > 0)
        except ValueError:
            return "unbounded"
        self.pivot(i, j)
        return "go_on"

    def bland_primal(self) -> str:
        while True:
            status = self.bland_primal_step()
            if status != "go_on":
                return status

    def first_phase_cost(self):
        """Цель первой фазы: минимизировать сумму искусственных переменных"""
        for j in range(self.n):
            self.c[j] = sum(self.A[i][j] for i in range(self.m))

    def artificial_sum(self) -> Fraction:
        return sum((self.b[i] for i, v in enumerate(self.b_vars) if v >= self.n), Fraction(0))


def feasible_combination(columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """
    Неотрицательные λ с Σ λ_i columns[i] = target, либо None.
    Каждая строка с отрицательной правой частью домножается на −1.
    """
    m, n = len(target), len(columns)
    if n == 0:
        return [] if all(t == 0 for t in target) else None

    tableau = SimplexTableau(m, n)
    for i in range(m):
        sign = -1 if target[i] < 0 else 1
        tableau.b[i] = Fraction(target[i]) * sign
        for j in range(n):
            tableau.A[i][j] = Fraction(columns[j][i]) * sign
    tableau.first_phase_cost()
    status = tableau.bland_primal()
    logger.debug(f"Первая фаза: {status}, опорных шагов {tableau.pivots}")

    if tableau.artificial_sum() != 0:
        return None
    solution = [Fraction(0)] * n
    for i, v in enumerate(tableau.b_vars):
        if v < n:
            solution[v] = tableau.b[i]
    return solution


def in_convex_hull(points: Sequence[Sequence[int]], target: Sequence[Fraction]) -> bool:
    """target - выпуклая комбинация points (точная проверка)"""
    columns = [[Fraction(x) for x in p] + [Fraction(1)] for p in points]
    return feasible_combination(columns, list(target) + [Fraction(1)]) is not None
