"""
Конечные частично упорядоченные множества.

Порядок хранится строками битов: down[i] - маска индексов j с j ≤ i,
up[i] - маска индексов j с i ≤ j. Диаграмма Хассе вычисляется один раз.
"""

import logging
from functools import cached_property
from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from errors import NonUniqueCoverError, NotALatticeError, RelationError, SizeGuardError
from config import get_config
from graphs.digraph import members

logger = logging.getLogger(__name__)


class FinitePoset:
    """Конечный частичный порядок на списке элементов"""

    def __init__(self, elements: Sequence[Hashable], down: Sequence[int], validate: bool = True):
        self.elements: Tuple[Hashable, ...] = tuple(elements)
        self.index: Dict[Hashable, int] = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise RelationError("distinct elements", tuple(e for e in self.elements
                                                         if self.elements.count(e) > 1)[:1])
        self.down: Tuple[int, ...] = tuple(down)
        up = [0] * len(self.elements)
        for j, mask in enumerate(self.down):
            for i in members(mask):
                up[i] |= 1 << j
        self.up: Tuple[int, ...] = tuple(up)
        if validate:
            self._validate()
        self._by_down = {mask: i for i, mask in enumerate(self.down)}
        self._by_up = {mask: i for i, mask in enumerate(self.up)}
        self._meets: Dict[Tuple[int, int], Optional[int]] = {}
        self._joins: Dict[Tuple[int, int], Optional[int]] = {}

    def _validate(self):
        elements = self.elements
        for j, mask in enumerate(self.down):
            if not mask >> j & 1:
                raise RelationError("reflexivity", (elements[j],))
            for i in members(mask):
                if i != j and self.down[i] >> j & 1:
                    raise RelationError("antisymmetry", (elements[i], elements[j]))
                extra = self.down[i] & ~mask
                if extra:
                    k = members(extra)[0]
                    raise RelationError("transitivity", (elements[k], elements[i], elements[j]))

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FinitePoset(size={len(self)}, covers={len(self.covers)})"

    # --- порядок ---

    def leq_index(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def leq(self, x: Hashable, y: Hashable) -> bool:
        return self.leq_index(self.index[x], self.index[y])

    @cached_property
    def lower_covers(self) -> Tuple[Tuple[int, ...], ...]:
        result = []
        for j, mask in enumerate(self.down):
            strict = mask & ~(1 << j)
            result.append(tuple(i for i in members(strict) if self.up[i] & strict == 1 << i))
        return tuple(result)

    @cached_property
    def upper_covers(self) -> Tuple[Tuple[int, ...], ...]:
        result: List[List[int]] = [[] for _ in self.elements]
        for j, lows in enumerate(self.lower_covers):
            for i in lows:
                result[i].append(j)
        return tuple(tuple(sorted(r)) for r in result)

    @cached_property
    def covers(self) -> Tuple[Tuple[int, int], ...]:
        """Рёбра диаграммы Хассе (i, j) с i ⋖ j"""
        return tuple(sorted((i, j) for j, lows in enumerate(self.lower_covers) for i in lows))

    @cached_property
    def heights(self) -> Tuple[int, ...]:
        """Длина наибольшей цепи, заканчивающейся в элементе"""
        height = [0] * len(self)
        for j in sorted(range(len(self)), key=lambda k: bin(self.down[k]).count("1")):
            lows = self.lower_covers[j]
            height[j] = 1 + max(height[i] for i in lows) if lows else 0
        return tuple(height)

    @cached_property
    def full_mask(self) -> int:
        return (1 << len(self)) - 1

    def bottom_index(self) -> Optional[int]:
        return self._by_up.get(self.full_mask)

    def top_index(self) -> Optional[int]:
        return self._by_down.get(self.full_mask)

    # --- решёточные операции ---

    def meet_index(self, i: int, j: int) -> Optional[int]:
        key = (i, j) if i <= j else (j, i)
        if key not in self._meets:
            self._meets[key] = self._by_down.get(self.down[i] & self.down[j])
        return self._meets[key]

    def join_index(self, i: int, j: int) -> Optional[int]:
        key = (i, j) if i <= j else (j, i)
        if key not in self._joins:
            self._joins[key] = self._by_up.get(self.up[i] & self.up[j])
        return self._joins[key]

    def meet(self, x: Hashable, y: Hashable) -> Optional[Hashable]:
        k = self.meet_index(self.index[x], self.index[y])
        return None if k is None else self.elements[k]

    def join(self, x: Hashable, y: Hashable) -> Optional[Hashable]:
        k = self.join_index(self.index[x], self.index[y])
        return None if k is None else self.elements[k]

    def lattice_counterexample(self) -> Optional[Tuple[Hashable, Hashable]]:
        """Первая пара без пересечения или объединения; None для решётки"""
        size = len(self)
        if size == 0:
            return ()
        bound = get_config().MAX_LATTICE_SIZE
        if size > bound:
            raise SizeGuardError("проверка решётки", size, bound)
        for i in range(size):
            for j in range(i + 1, size):
                if self.meet_index(i, j) is None or self.join_index(i, j) is None:
                    return self.elements[i], self.elements[j]
        return None

    def is_lattice(self) -> bool:
        return self.lattice_counterexample() is None

    def require_lattice(self):
        pair = self.lattice_counterexample()
        if pair is not None:
            raise NotALatticeError(f"Не решётка: у пары {pair!r} нет пересечения или объединения", pair)

    # --- неприводимые элементы ---

    def join_irreducible_indices(self) -> List[int]:
        return [i for i, lows in enumerate(self.lower_covers) if len(lows) == 1]

    def meet_irreducible_indices(self) -> List[int]:
        return [i for i, ups in enumerate(self.upper_covers) if len(ups) == 1]

    def join_irreducibles(self) -> frozenset:
        return frozenset(self.elements[i] for i in self.join_irreducible_indices())

    def meet_irreducibles(self) -> frozenset:
        return frozenset(self.elements[i] for i in self.meet_irreducible_indices())

    def lower_cover(self, x: Hashable) -> Hashable:
        """x_⋆ для неразложимого в объединение x"""
        lows = self.lower_covers[self.index[x]]
        if len(lows) != 1:
            raise NonUniqueCoverError(f"У {x!r} {len(lows)} нижних покрытий")
        return self.elements[lows[0]]

    def upper_cover(self, x: Hashable) -> Hashable:
        """x^⋆ для неразложимого в пересечение x"""
        ups = self.upper_covers[self.index[x]]
        if len(ups) != 1:
            raise NonUniqueCoverError(f"У {x!r} {len(ups)} верхних покрытий")
        return self.elements[ups[0]]

    def subposet(self, keep: Iterable[Hashable]) -> 'FinitePoset':
        """Индуцированный подпорядок (в порядке исходного списка)"""
        wanted = set(keep)
        chosen = [i for i, e in enumerate(self.elements) if e in wanted]
        remap = {old: new for new, old in enumerate(chosen)}
        down = []
        for old in chosen:
            mask = 0
            for i in members(self.down[old]):
                if i in remap:
                    mask |= 1 << remap[i]
            down.append(mask)
        return FinitePoset([self.elements[i] for i in chosen], down, validate=False)


def poset_from_relation(elements: Sequence[Hashable], leq: Callable[[Any, Any], bool]) -> FinitePoset:
    """Построение и проверка частичного порядка по предикату leq"""
    elements = list(elements)
    down = []
    for y in elements:
        mask = 0
        for i, x in enumerate(elements):
            if leq(x, y):
                mask |= 1 << i
        down.append(mask)
    return FinitePoset(elements, down)


def poset_from_masks(elements: Sequence[Hashable], masks: Sequence[Tuple[int, ...]]) -> FinitePoset:
    """Покомпонентный порядок по включению для кортежей битовых масок"""
    def leq(a: Tuple[int, ...], b: Tuple[int, ...]) -> bool:
        return all(x & ~y == 0 for x, y in zip(a, b))

    rows = list(masks)
    down = []
    for b in rows:
        mask = 0
        for i, a in enumerate(rows):
            if leq(a, b):
                mask |= 1 << i
        down.append(mask)
    return FinitePoset(elements, down, validate=False)


def chain(k: int) -> FinitePoset:
    return poset_from_relation(list(range(k)), lambda a, b: a <= b)


def antichain(k: int) -> FinitePoset:
    return poset_from_relation(list(range(k)), lambda a, b: a == b)


def boolean_lattice(k: int) -> FinitePoset:
    subsets = [frozenset(i for i in range(k) if s >> i & 1) for s in range(1 << k)]
    return poset_from_relation(subsets, lambda a, b: a <= b)
