"""
Биекции для n-гребёнки: орнаментации ↔ помеченные пути Дика ↔
неразложимые совершенные паросочетания на [2n+2].

Зуб i - вершина 2i−1, узел рукояти i - вершина 2i.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Any, FrozenSet, Iterator, List, Tuple

from config import get_config
from enumeration.counts import comb_count
from errors import OrnamentError, SizeGuardError
from graphs.fixtures import comb
from structures.ornament import Ornamentation, enumerate_ornamentations

logger = logging.getLogger(__name__)

UP, DOWN = "U", "D"


@dataclass(frozen=True)
class LabeledDyckPath:
    """Путь Дика; каждый спуск помечен числом от 0 до высоты его верхнего конца"""
    steps: Tuple[str, ...]
    labels: Tuple[int, ...]

    def __post_init__(self):
        height = 0
        tops = []
        for step in self.steps:
            if step == UP:
                height += 1
            elif step == DOWN:
                tops.append(height)
                height -= 1
                if height < 0:
                    raise OrnamentError(f"Путь {''.join(self.steps)} опускается ниже оси")
            else:
                raise OrnamentError(f"Неизвестный шаг: {step!r}")
        if height != 0:
            raise OrnamentError(f"Путь {''.join(self.steps)} не возвращается на ось")
        if len(self.labels) != len(tops):
            raise OrnamentError("Число меток не равно числу спусков")
        for label, top in zip(self.labels, tops):
            if not 0 <= label <= top:
                raise OrnamentError(f"Метка {label} вне [0, {top}]")

    @property
    def tops(self) -> List[int]:
        """Высоты верхних концов спусков"""
        height, result = 0, []
        for step in self.steps:
            if step == UP:
                height += 1
            else:
                result.append(height)
                height -= 1
        return result

    def __repr__(self) -> str:
        return "".join(self.steps) + "|" + ",".join(map(str, self.labels))


@dataclass(frozen=True)
class PerfectMatching:
    """Совершенное паросочетание на [2m]; пары (a, b) с a < b"""
    size: int
    pairs: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        pairs = frozenset((min(a, b), max(a, b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        covered = sorted(p for pair in pairs for p in pair)
        if covered != list(range(1, 2 * self.size + 1)):
            raise OrnamentError(f"Пары {sorted(pairs)} не разбивают [{2 * self.size}]")

    @property
    def partner(self) -> Dict[int, int]:
        result = {}
        for a, b in self.pairs:
            result[a], result[b] = b, a
        return result

    def is_indecomposable(self) -> bool:
        """Никакой собственный префикс [2k] не замкнут относительно пар"""
        partner = self.partner
        open_count = 0
        for p in range(1, 2 * self.size):
            open_count += 1 if partner[p] > p else -1
            if open_count == 0:
                return False
        return True

    def __repr__(self) -> str:
        return "M{" + " ".join(f"{a}-{b}" for a, b in sorted(self.pairs)) + "}"


def _check_bound(n: int):
    bound = get_config().MAX_COMB_BIJECTION
    if n > bound:
        raise SizeGuardError("размер гребёнки для биекций", n, bound)


# --- орнаментации ↔ пути ---

def ornamentation_to_path(n: int, o: Ornamentation) -> LabeledDyckPath:
    """
    c_i - число орнаментов рукояти, содержащих узел i (включая его собственный);
    перед i-м спуском c_i − c_{i−1} + 1 подъёмов (c_0 = 1); метка i-го спуска -
    число орнаментов рукояти, содержащих зуб i.
    """
    heights, labels = [], []
    for i in range(1, n + 1):
        owners = [w for w in range(i, n + 1) if o.mask(2 * w) >> (2 * i) & 1]
        heights.append(len(owners))
        labels.append(sum(1 for w in owners if o.mask(2 * w) >> (2 * i - 1) & 1))
    steps: List[str] = []
    previous = 1
    for c in heights:
        steps.extend([UP] * (c - previous + 1))
        steps.append(DOWN)
        previous = c
    return LabeledDyckPath(tuple(steps), tuple(labels))


def path_to_ornamentation(n: int, path: LabeledDyckPath) -> Ornamentation:
    """O(w) на рукояти - отрезок [a_w, w], a_w = min{i : c_j > c_w при i ≤ j < w}; зуб i в ℓ_i старших орнаментах цепочки"""
    t = comb(n)
    c = [0] + path.tops
    if len(c) != n + 1:
        raise OrnamentError(f"Путь полудлины {len(c) - 1} для гребёнки размера {n}")
    start = [0] * (n + 1)
    for w in range(1, n + 1):
        a = w
        while a > 1 and c[a - 1] > c[w]:
            a -= 1
        start[w] = a

    masks = [1 << v for v in t.vertices]
    for w in range(1, n + 1):
        mask = 0
        for i in range(start[w], w + 1):
            mask |= 1 << (2 * i)
        masks[2 * w - 1] = mask
    for i, label in enumerate(path.labels, start=1):
        chain = [w for w in range(i, n + 1) if start[w] <= i]
        for w in chain[len(chain) - label:] if label else []:
            masks[2 * w - 1] |= 1 << (2 * i - 1)
    return Ornamentation(t, tuple(masks))


# --- пути ↔ паросочетания ---

def path_to_matching(path: LabeledDyckPath) -> PerfectMatching:
    """
    Одна свободная точка в начале; подъём добавляет свободную точку, спуск с меткой ℓ -
    точку, сопоставленную (ℓ+1)-й свободной справа; последняя точка закрывает оставшуюся.
    """
    free = [1]
    pairs = []
    point = 1
    label_iter = iter(path.labels)
    for step in path.steps:
        point += 1
        if step == UP:
            free.append(point)
        else:
            label = next(label_iter)
            pairs.append((free.pop(len(free) - 1 - label), point))
    point += 1
    pairs.append((free.pop(), point))
    return PerfectMatching(point // 2, frozenset(pairs))


def matching_to_path(matching: PerfectMatching) -> LabeledDyckPath:
    if not matching.is_indecomposable():
        raise OrnamentError(f"Паросочетание {matching!r} разложимо")
    partner = matching.partner
    free = [1]
    steps, labels = [], []
    for p in range(2, 2 * matching.size):
        if partner[p] > p:
            steps.append(UP)
            free.append(p)
        else:
            steps.append(DOWN)
            position = free.index(partner[p])
            labels.append(len(free) - 1 - position)
            free.pop(position)
    return LabeledDyckPath(tuple(steps), tuple(labels))


# --- перечисления ---

def dyck_paths(n: int) -> Iterator[Tuple[str, ...]]:
    def extend(prefix: List[str], ups: int, height: int):
        if len(prefix) == 2 * n:
            yield tuple(prefix)
            return
        if ups < n:
            yield from extend(prefix + [UP], ups + 1, height + 1)
        if height > 0:
            yield from extend(prefix + [DOWN], ups, height - 1)

    yield from extend([], 0, 0)


def labeled_dyck_paths(n: int) -> List[LabeledDyckPath]:
    result = []
    for steps in dyck_paths(n):
        tops = LabeledDyckPath(steps, tuple(0 for s in steps if s == DOWN)).tops
        labelings = [()]
        for top in tops:
            labelings = [prefix + (label,) for prefix in labelings for label in range(top + 1)]
        result.extend(LabeledDyckPath(steps, labels) for labels in labelings)
    return result


def perfect_matchings(m: int) -> Iterator[PerfectMatching]:
    """Все совершенные паросочетания на [2m]"""
    def extend(rest: Tuple[int, ...], pairs: Tuple[Tuple[int, int], ...]):
        if not rest:
            yield PerfectMatching(m, frozenset(pairs))
            return
        first = rest[0]
        for k in range(1, len(rest)):
            yield from extend(rest[1:k] + rest[k + 1:], pairs + ((first, rest[k]),))

    yield from extend(tuple(range(1, 2 * m + 1)), ())


def indecomposable_matchings(m: int) -> List[PerfectMatching]:
    return [x for x in perfect_matchings(m) if x.is_indecomposable()]


@dataclass
class CombBijectionReport:
    n: int
    expected: int
    ornamentations: int = 0
    dyck_paths: int = 0
    matchings: int = 0
    ornament_roundtrip: bool = False
    path_roundtrip: bool = False
    matching_roundtrip: bool = False
    images_cover: bool = False

    @property
    def success(self) -> bool:
        sizes = {self.expected, self.ornamentations, self.dyck_paths, self.matchings}
        return (len(sizes) == 1 and self.ornament_roundtrip and self.path_roundtrip
                and self.matching_roundtrip and self.images_cover)

    def to_dict(self) -> Dict[str, Any]:
        return {**self.__dict__, "success": self.success}


def comb_bijections(n: int) -> CombBijectionReport:
    """Проверка обеих биекций обходом туда и обратно и по мощностям E_n"""
    _check_bound(n)
    ornamentations = enumerate_ornamentations(comb(n))
    paths = labeled_dyck_paths(n)
    matchings = indecomposable_matchings(n + 1)
    report = CombBijectionReport(n, comb_count(n), len(ornamentations), len(paths), len(matchings))

    forward = {o: ornamentation_to_path(n, o) for o in ornamentations}
    report.ornament_roundtrip = all(path_to_ornamentation(n, p) == o for o, p in forward.items())
    report.path_roundtrip = all(matching_to_path(path_to_matching(p)) == p for p in paths)
    report.matching_roundtrip = all(path_to_matching(matching_to_path(x)) == x for x in matchings)
    report.images_cover = (set(forward.values()) == set(paths)
                           and {path_to_matching(p) for p in paths} == set(matchings))
    if not report.success:
        logger.warning(f"Биекции гребёнки нарушены при n={n}: {report.to_dict()}")
    return report
