#!/usr/bin/env python3
"""
Быстрый запуск: проверка окружения и короткий прогон всех наборов
"""

import sys


def check_dependencies() -> bool:
    """Проверка версии Python и зависимостей"""

    print("🔍 Проверяю зависимости...")

    python_version = sys.version_info
    if python_version.major < 3 or (python_version.major == 3 and python_version.minor < 8):
        print("❌ Требуется Python 3.8 или выше")
        return False

    print(f"✅ Python {python_version.major}.{python_version.minor}.{python_version.micro}")

    dependencies = [
        "networkx",
        "pytest",
    ]

    missing = []
    for dep in dependencies:
        try:
            __import__(dep)
            print(f"✅ {dep}")
        except ImportError:
            missing.append(dep)
            print(f"❌ {dep}")

    if missing:
        print("Установите вручную: pip install -r requirements.txt")
        return False
    return True


def main() -> int:
    """Основная функция"""
    print("=" * 60)
    print("🚀 РЕШЁТКИ ОРНАМЕНТАЦИЙ - БЫСТРЫЙ ЗАПУСК")
    print("=" * 60)

    if not check_dependencies():
        return 2

    print("\n🧪 Короткий прогон: verify all --n 4")
    from main import main as cli_main
    code = cli_main(["verify", "all", "--n", "4"])
    print("✅ Все проверки пройдены" if code == 0 else f"❌ Код выхода {code}")
    return code


if __name__ == "__main__":
    sys.exit(main())
