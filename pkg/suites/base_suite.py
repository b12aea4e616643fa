from abc import ABC, abstractmethod
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Any, Callable, Iterable, List, Optional, Tuple
from dataclasses import dataclass
import logging
import time

from config import get_config
from errors import OrnamentError, SizeGuardError
from graphs.trees import increasing_labeling_count
from reports.report import CheckRecord, VerificationReport

logger = logging.getLogger(__name__)

Verdict = Tuple[bool, Optional[Any]]


@dataclass
class SuiteState:
    """Состояние набора проверок"""
    is_active: bool = False
    current_instance: Optional[str] = None
    checks_completed: int = 0
    errors: List[str] = None

    def __post_init__(self):
        if self.errors is None:
            self.errors = []


def timed_check(name: str, instance: str, fn: Callable[[], Verdict]) -> CheckRecord:
    """
    Выполнение одной проверки. Ошибка библиотеки (кроме превышения размера)
    записывается как неудача со свидетелем, а не пробрасывается.
    """
    started = time.perf_counter()
    try:
        verdict, witness = fn()
    except SizeGuardError:
        raise
    except OrnamentError as e:
        verdict, witness = False, f"{type(e).__name__}: {e}"
    return CheckRecord(name, instance, bool(verdict), witness, time.perf_counter() - started)


class BaseSuite(ABC):
    """Базовый класс набора проверок"""

    def __init__(self, name: str):
        self.name = name
        self.state = SuiteState()
        self.logger = logging.getLogger(f"suite.{name}")

    @abstractmethod
    def run(self, bound: int, seed: int = 0) -> VerificationReport:
        """Запуск набора до заданной границы размера"""
        pass

    def start(self):
        self.state.is_active = True
        self.logger.info(f"Набор {self.name} запущен")

    def stop(self):
        self.state.is_active = False
        self.logger.info(f"Набор {self.name} остановлен")

    def reset(self):
        self.state = SuiteState()
        self.logger.info(f"Набор {self.name} сброшен")

    def log_check(self, record: CheckRecord):
        """Учёт результата проверки"""
        self.state.current_instance = record.instance
        self.state.checks_completed += 1
        if not record.verdict:
            self.state.errors.append(f"{record.name} @ {record.instance}")
            self.logger.warning(f"Проверка {record.name} не прошла на {record.instance}: {record.witness}")
        else:
            self.logger.debug(f"Проверка {record.name} прошла на {record.instance}")

    def collect(self, report: VerificationReport, worker: Callable[[Any], List[CheckRecord]],
                instances: Iterable[Any]):
        """
        Прогон worker по независимым экземплярам; при WORKERS > 1 - в пуле процессов.
        Записи упорядочиваются по ключу экземпляра независимо от порядка завершения.
        """
        instances = list(instances)
        workers = get_config().WORKERS
        if workers > 1 and len(instances) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                batches = list(pool.map(worker, instances))
        else:
            batches = [worker(instance) for instance in instances]

        records = [record for batch in batches for record in batch]
        records.sort(key=lambda r: (r.instance, r.name))
        for record in records:
            self.log_check(record)
            report.add(record)

    def execute(self, bound: int, seed: int = 0) -> VerificationReport:
        """run() с журналированием начала и конца"""
        self.start()
        try:
            report = self.run(bound, seed)
        finally:
            self.stop()
        self.logger.info(report.summary())
        return report

    def get_status(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "is_active": self.state.is_active,
            "current_instance": self.state.current_instance,
            "checks_completed": self.state.checks_completed,
            "error_count": len(self.state.errors),
            "last_error": self.state.errors[-1] if self.state.errors else None,
        }


def record_tree_coverage(report: VerificationReport, trees: List[Any], bound: int):
    """Деревья берутся по одному на класс изоморфизма; в отчёт идёт и число свёрнутых нумераций"""
    report.coverage["trees"] = len(trees)
    report.coverage["increasing_labelings"] = increasing_labeling_count(bound)


def instance_key(d) -> str:
    """Устойчивое имя экземпляра: число вершин и рёбра"""
    return f"n{d.n}:" + ",".join(f"{u}{v}" for u, v in d.sorted_edges)
