import json
import logging
from dataclasses import dataclass, field, asdict
from typing import Dict, Any, List, Optional

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


@dataclass
class CheckRecord:
    """Одна проверка: имя, экземпляр, вердикт и свидетель при неудаче"""
    name: str
    instance: str
    verdict: bool
    witness: Optional[Any] = None
    wall_time: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        # время выполнения в файл не пишется: одинаковые запуски дают одинаковый JSON
        data = asdict(self)
        data.pop("wall_time")
        return data


@dataclass
class VerificationReport:
    """Отчёт набора проверок"""
    suite: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    records: List[CheckRecord] = field(default_factory=list)
    coverage: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(record.verdict for record in self.records)

    @property
    def failures(self) -> List[CheckRecord]:
        return [record for record in self.records if not record.verdict]

    @property
    def wall_time(self) -> float:
        return sum(record.wall_time for record in self.records)

    def add(self, record: CheckRecord):
        self.records.append(record)

    def extend(self, other: 'VerificationReport'):
        self.records.extend(other.records)
        for key, value in other.coverage.items():
            self.coverage[f"{other.suite}.{key}"] = value

    def sort(self):
        self.records.sort(key=lambda r: (r.name, r.instance))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "parameters": self.parameters,
            "passed": self.passed,
            "checks": len(self.records),
            "failures": len(self.failures),
            "coverage": self.coverage,
            "records": [record.to_dict() for record in self.records],
        }

    def summary(self) -> str:
        status = "✅ пройден" if self.passed else "❌ провален"
        return (f"Набор {self.suite}: {status}; проверок {len(self.records)}, "
                f"неудач {len(self.failures)}, время {self.wall_time:.2f} с")

    def save(self, path: str):
        """Сохранение отчёта в JSON"""
        try:
            with open(path, 'w', encoding='utf-8') as f:
                json.dump(self.to_dict(), f, ensure_ascii=False, indent=2, sort_keys=True)
                f.write("\n")
        except OSError as e:
            logger.error(f"Ошибка при сохранении отчёта {path}: {e}")
            raise

    @classmethod
    def load(cls, path: str) -> 'VerificationReport':
        """Загрузка отчёта из JSON"""
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"Неизвестная версия схемы отчёта: {data.get('schema')}")
        records = [CheckRecord(**record) for record in data.get("records", [])]
        return cls(data["suite"], data.get("parameters", {}), records, data.get("coverage", {}))


def write_json(data: Any, path: Optional[str]) -> str:
    """JSON в файл (если задан путь); возвращает текст"""
    text = json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
    return text
