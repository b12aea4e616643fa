import os
from dataclasses import dataclass
from functools import lru_cache


@dataclass
class Config:
    """Конфигурация движка решёток орнаментаций"""

    # Ограничения размера перечислений
    MAX_ORNAMENTATIONS: int = 200_000
    MAX_PERMUTATION_VERTICES: int = 8
    MAX_REORIENTATION_EDGES: int = 24
    MAX_LATTICE_SIZE: int = 2 ** 16
    MAX_SOURCING_PRODUCT: int = 10 ** 6
    MAX_TRIPLE_CHECK: int = 150
    MAX_CYCLE_SOURCINGS: int = 2000
    MAX_POLYTOPE_POINTS: int = 200

    # Производящие функции и биекции
    MAX_SERIES_ORDER: int = 40
    MAX_COMB_BIJECTION: int = 6

    # Интривальные гиперграфы
    INTREEVAL_EXHAUSTIVE_EDGES: int = 16
    INTREEVAL_SAMPLE_SIZE: int = 2000
    INTREEVAL_TIME_BUDGET: float = 900.0

    # Исполнение
    WORKERS: int = 1
    LOG_FILE: str = "ornaments.log"

    @classmethod
    def from_env(cls) -> 'Config':
        """Загрузка конфигурации из переменных окружения"""
        return cls(
            MAX_ORNAMENTATIONS=int(os.getenv("ORNAMENT_MAX_ORNAMENTATIONS", "200000")),
            MAX_PERMUTATION_VERTICES=int(os.getenv("ORNAMENT_MAX_PERMUTATION_VERTICES", "8")),
            MAX_REORIENTATION_EDGES=int(os.getenv("ORNAMENT_MAX_REORIENTATION_EDGES", "24")),
            MAX_LATTICE_SIZE=int(os.getenv("ORNAMENT_MAX_LATTICE_SIZE", str(2 ** 16))),
            MAX_SOURCING_PRODUCT=int(os.getenv("ORNAMENT_MAX_SOURCING_PRODUCT", str(10 ** 6))),
            MAX_POLYTOPE_POINTS=int(os.getenv("ORNAMENT_MAX_POLYTOPE_POINTS", "200")),
            MAX_TRIPLE_CHECK=int(os.getenv("ORNAMENT_MAX_TRIPLE_CHECK", "150")),
            MAX_CYCLE_SOURCINGS=int(os.getenv("ORNAMENT_MAX_CYCLE_SOURCINGS", "2000")),
            MAX_SERIES_ORDER=int(os.getenv("ORNAMENT_MAX_SERIES_ORDER", "40")),
            MAX_COMB_BIJECTION=int(os.getenv("ORNAMENT_MAX_COMB_BIJECTION", "6")),
            INTREEVAL_EXHAUSTIVE_EDGES=int(os.getenv("ORNAMENT_INTREEVAL_EXHAUSTIVE_EDGES", "16")),
            INTREEVAL_SAMPLE_SIZE=int(os.getenv("ORNAMENT_INTREEVAL_SAMPLE_SIZE", "2000")),
            INTREEVAL_TIME_BUDGET=float(os.getenv("ORNAMENT_INTREEVAL_TIME_BUDGET", "900")),
            WORKERS=int(os.getenv("ORNAMENT_WORKERS", "1")),
            LOG_FILE=os.getenv("ORNAMENT_LOG_FILE", "ornaments.log"),
        )


@lru_cache(maxsize=1)
def get_config() -> Config:
    """Общая конфигурация процесса (читается из окружения один раз)"""
    return Config.from_env()
