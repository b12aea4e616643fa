"""Пополнение Макнейла через сечения"""

import logging
from typing import Dict, FrozenSet, Hashable, Tuple

from graphs.digraph import members
from posets.poset import FinitePoset

logger = logging.getLogger(__name__)


def macneille_completion(p: FinitePoset) -> Tuple[FinitePoset, Dict[Hashable, FrozenSet[Hashable]]]:
    """
    Сечения - это пересечения главных идеалов ↓x (пустое пересечение даёт
    всё множество). Возвращает решётку сечений по включению и вложение x ↦ ↓x.
    """
    full = p.full_mask
    cuts = {full}
    frontier = [full]
    principal = list(p.down)
    cuts.update(principal)
    frontier.extend(principal)
    while frontier:
        current = frontier.pop()
        for ideal in principal:
            cut = current & ideal
            if cut not in cuts:
                cuts.add(cut)
                frontier.append(cut)

    ordered = sorted(cuts, key=lambda m: (bin(m).count("1"), m))
    down = []
    for b in ordered:
        mask = 0
        for i, a in enumerate(ordered):
            if a & ~b == 0:
                mask |= 1 << i
        down.append(mask)

    def key(mask: int) -> FrozenSet[Hashable]:
        return frozenset(p.elements[i] for i in members(mask))

    completion = FinitePoset([key(m) for m in ordered], down, validate=False)
    embedding = {p.elements[i]: key(p.down[i]) for i in range(len(p))}
    logger.debug(f"Пополнение Макнейла: {len(p)} → {len(completion)} элементов")
    return completion, embedding


def irreducible_core(p: FinitePoset) -> FinitePoset:
    """Подпорядок неразложимых в объединение или пересечение элементов"""
    keep = set(p.join_irreducibles()) | set(p.meet_irreducibles())
    return p.subposet(keep)
