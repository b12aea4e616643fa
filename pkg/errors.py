"""Исключения движка: у каждого вида ошибки свой код выхода CLI"""

from typing import Any, Optional, Tuple


class OrnamentError(ValueError):
    """Базовая ошибка библиотеки"""
    exit_code = 4


class RelationError(OrnamentError):
    """Отношение не является частичным порядком"""

    def __init__(self, axiom: str, witness: Tuple[Any, ...]):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"Нарушена аксиома '{axiom}', свидетель: {witness!r}")


class SizeGuardError(OrnamentError):
    """Превышено ограничение размера"""
    exit_code = 3

    def __init__(self, what: str, size: Any, bound: Any):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(f"{what}: размер {size} превышает предел {bound}")


class BudgetExceededError(SizeGuardError):
    """Перебор не помещается в бюджет, а выборка не разрешена"""


class TruncationError(SizeGuardError):
    """Порядок усечения ряда выше допустимого"""


class AmbientMismatchError(OrnamentError):
    """Объекты относятся к разным графам"""


class NotATreeError(OrnamentError):
    """Граф не является ориентированным деревом"""


class NotAPathError(OrnamentError):
    """Последовательность вершин не является путём"""


class NotALatticeError(OrnamentError):
    """Частичный порядок не является решёткой"""

    def __init__(self, message: str, pair: Optional[Tuple[Any, Any]] = None):
        self.pair = pair
        super().__init__(message)


class SemidistributivityError(OrnamentError):
    """Требуется полудистрибутивная решётка"""


class NonUniqueCoverError(OrnamentError):
    """Покрытие элемента не единственно"""


class AcyclicityRequiredError(OrnamentError):
    """Операция определена только для ацикличных объектов"""


class HypothesisError(OrnamentError):
    """Нарушено условие теоремы (например PIC или звёздная разреженность)"""


class IncomparablePairError(OrnamentError):
    """Вершины несравнимы в порядке дерева"""


class StarredTreeError(OrnamentError):
    """Операция требует дерево без звезды"""


class DegenerateInputError(OrnamentError):
    """Вырожденные входные данные (совпадающие точки)"""


class ZeroDirectionError(OrnamentError):
    """Ребро скелета ортогонально направлению ω"""
