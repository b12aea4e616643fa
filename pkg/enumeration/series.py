"""
Усечённые степенные ряды по y с точными коэффициентами и проверка
тождеств для производящих функций метёл.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb as binomial
from typing import Dict, Any, List

from config import get_config
from enumeration.counts import broom_count, catalan
from errors import OrnamentError, TruncationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Series:
    """Ряд Σ coefficients[i] y^i по модулю y^(order+1)"""
    coefficients: tuple
    order: int

    def __post_init__(self):
        padded = tuple(Fraction(c) for c in self.coefficients[:self.order + 1])
        padded += (Fraction(0),) * (self.order + 1 - len(padded))
        object.__setattr__(self, "coefficients", padded)

    @classmethod
    def constant(cls, value, order: int) -> 'Series':
        return cls((value,), order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i] if 0 <= i <= self.order else Fraction(0)

    def _check(self, other: 'Series'):
        if self.order != other.order:
            raise OrnamentError(f"Разные порядки усечения: {self.order} и {other.order}")

    def __add__(self, other: 'Series') -> 'Series':
        self._check(other)
        return Series(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)), self.order)

    def __sub__(self, other: 'Series') -> 'Series':
        self._check(other)
        return Series(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)), self.order)

    def __mul__(self, other) -> 'Series':
        if not isinstance(other, Series):
            return Series(tuple(c * other for c in self.coefficients), self.order)
        self._check(other)
        result = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j in range(self.order + 1 - i):
                    result[i + j] += a * other.coefficients[j]
        return Series(tuple(result), self.order)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> 'Series':
        """Умножение на y^k"""
        return Series((Fraction(0),) * k + self.coefficients, self.order)

    def divide_by_y(self) -> 'Series':
        """Деление на y; теряется старший коэффициент"""
        if self.coefficients[0]:
            raise OrnamentError("Деление на y ряда с ненулевым свободным членом")
        return Series(self.coefficients[1:], self.order)

    def inverse(self) -> 'Series':
        if not self.coefficients[0]:
            raise OrnamentError("Ряд с нулевым свободным членом необратим")
        result = [Fraction(1) / self.coefficients[0]]
        for n in range(1, self.order + 1):
            acc = sum(self.coefficients[k] * result[n - k] for k in range(1, n + 1))
            result.append(-acc / self.coefficients[0])
        return Series(tuple(result), self.order)

    def compose(self, inner: 'Series') -> 'Series':
        """self(inner(y)) для inner без свободного члена (схема Горнера)"""
        self._check(inner)
        if inner.coefficients[0]:
            raise OrnamentError("Подстановка ряда с ненулевым свободным членом")
        result = Series.constant(0, self.order)
        for c in reversed(self.coefficients):
            result = result * inner + Series.constant(c, self.order)
        return result

    def integers(self) -> List[int]:
        if any(c.denominator != 1 for c in self.coefficients):
            raise OrnamentError("Коэффициенты ряда не целые")
        return [int(c) for c in self.coefficients]


def _guard(order: int):
    bound = get_config().MAX_SERIES_ORDER
    if order > bound:
        raise TruncationError("порядок усечения ряда", order, bound)


def catalan_series(order: int) -> Series:
    _guard(order)
    return Series(tuple(catalan(n) for n in range(order + 1)), order)


def broom_series(m: int, order: int) -> Series:
    """B_m(y) по значениям рекуррентности"""
    _guard(order)
    return Series(tuple(broom_count(m, n) for n in range(order + 1)), order)


def solved_broom_series(m: int, order: int) -> List[Series]:
    """
    B_0, …, B_m из функционального уравнения B_m = 1 + yC Σ_k C(m,k) B_k,
    решённого относительно B_m: B_m (1 − yC) = 1 + yC Σ_{k<m} C(m,k) B_k.
    """
    _guard(order)
    one = Series.constant(1, order)
    y_c = catalan_series(order).shift()
    factor = (one - y_c).inverse()
    solved: List[Series] = []
    for k in range(m + 1):
        rest = Series.constant(0, order)
        for j, b in enumerate(solved):
            rest = rest + b * binomial(k, j)
        solved.append((one + y_c * rest) * factor)
    return solved


@dataclass
class SeriesReport:
    order_x: int
    order_y: int
    functional_equation: Dict[int, bool] = field(default_factory=dict)
    signed_binomial: Dict[int, bool] = field(default_factory=dict)
    solved_matches_recurrence: Dict[int, bool] = field(default_factory=dict)
    b1_formula: bool = False
    b2_formula: bool = False

    @property
    def success(self) -> bool:
        checks = [self.b1_formula, self.b2_formula]
        for table in (self.functional_equation, self.signed_binomial, self.solved_matches_recurrence):
            checks.extend(table.values())
        return all(checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order_x": self.order_x, "order_y": self.order_y,
            "functional_equation": {str(k): v for k, v in self.functional_equation.items()},
            "signed_binomial": {str(k): v for k, v in self.signed_binomial.items()},
            "solved_matches_recurrence": {str(k): v for k, v in self.solved_matches_recurrence.items()},
            "b1_formula": self.b1_formula, "b2_formula": self.b2_formula,
            "success": self.success,
        }


def broom_series_checks(order_x: int = 6, order_y: int = 8) -> SeriesReport:
    """
    Покоэффициентная проверка: B_m − yC Σ C(m,k) B_k = 1 (коэффициент при x^m/m!
    в B(x,y)(1 − e^x yC) = e^x), yC B_m = Σ (−1)^{m−k} C(m,k) (B_k − 1),
    B_1 = (C − 1)/y и B_2 = C³(1 + yC).
    """
    _guard(order_y)
    _guard(order_x)
    # запас в один член для деления на y
    order = order_y + 1
    one = Series.constant(1, order)
    c = catalan_series(order)
    y_c = c.shift()
    b = [broom_series(m, order) for m in range(max(order_x, 2) + 1)]
    solved = solved_broom_series(order_x, order)

    report = SeriesReport(order_x, order_y)
    for m in range(order_x + 1):
        total = Series.constant(0, order)
        signed = Series.constant(0, order)
        for k in range(m + 1):
            total = total + b[k] * binomial(m, k)
            signed = signed + (b[k] - one) * ((-1) ** (m - k) * binomial(m, k))
        residual = b[m] - y_c * total
        report.functional_equation[m] = _agree(residual, one, order_y)
        report.signed_binomial[m] = _agree(y_c * b[m], signed, order_y)
        report.solved_matches_recurrence[m] = _agree(solved[m], b[m], order_y)

    report.b1_formula = _agree(b[1], (c - one).divide_by_y(), order_y)
    report.b2_formula = _agree(b[2], c * c * c * (one + y_c), order_y)
    if not report.success:
        logger.warning(f"Тождества рядов нарушены до порядка ({order_x}, {order_y})")
    return report


def _agree(a: Series, b: Series, order: int) -> bool:
    return all(a[i] == b[i] for i in range(order + 1))
