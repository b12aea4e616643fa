"""Вывод диаграмм Хассе в DOT и JSON"""

from typing import Any, Callable, Dict, Hashable

from posets.poset import FinitePoset

Serializer = Callable[[Hashable], Any]


def poset_to_dict(p: FinitePoset, serialize: Serializer = repr) -> Dict[str, Any]:
    return {
        "elements": [serialize(e) for e in p.elements],
        "covers": [[i, j] for i, j in p.covers],
    }


def poset_to_dot(p: FinitePoset, serialize: Serializer = str, name: str = "hasse") -> str:
    """DOT диаграммы Хассе; элементы одного ранга в одном ряду"""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, element in enumerate(p.elements):
        label = str(serialize(element)).replace('"', '\\"')
        lines.append(f'  n{i} [label="{label}"];')
    by_height: Dict[int, list] = {}
    for i, h in enumerate(p.heights):
        by_height.setdefault(h, []).append(i)
    for h in sorted(by_height):
        row = " ".join(f"n{i};" for i in by_height[h])
        lines.append(f"  {{ rank=same; {row} }}")
    for i, j in p.covers:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
