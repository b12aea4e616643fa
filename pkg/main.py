import os
import sys
import json
import argparse
import logging
from typing import Any, Dict, List, Optional

# Добавляем путь для импортов
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from config import get_config
from errors import OrnamentError, SizeGuardError
from enumeration.bijections import comb_bijections
from enumeration.counts import broom_count, broom_table_csv, comb_count
from graphs.digraph import Digraph, Hypergraph, classify_tree, path_hypergraph, transitive_closure
from graphs.fixtures import fixture, fixture_names
from polytope.hypergraphic import oriented_skeleton, skeleton_poset
from posets.export import poset_to_dict, poset_to_dot
from posets.lattice import is_semidistributive
from posets.poset import FinitePoset
from reports.report import write_json
from structures.intreeval import IntreevalHypergraph, path_intersection_counterexample, star_sparse_witness
from structures.ornament import aorn_poset, orn_poset
from structures.reorient import areori_poset, rbi_poset
from structures.sourcing import asour_poset
from suites.registry import run_suite, suite_names

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

POSETS = ("orn", "areori", "asour", "aorn", "rbi")


def setup_logging(level: str = "INFO"):
    """Журнал в консоль и в файл из конфигурации"""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.StreamHandler(),
            logging.FileHandler(get_config().LOG_FILE, encoding='utf-8')
        ]
    )


def load_json(path: str) -> Dict[str, Any]:
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)


def load_graph(path: str) -> Digraph:
    return Digraph.from_dict(load_json(path))


def load_hypergraph(path: str) -> Hypergraph:
    """Гиперграф из JSON; для графа берётся гиперграф путей"""
    data = load_json(path)
    if "hyperedges" in data:
        return Hypergraph.from_dict(data)
    return path_hypergraph(Digraph.from_dict(data))


def load_intreeval(path: str) -> IntreevalHypergraph:
    """{"tree": {...}, "hyperedges": [...]} или просто дерево (тогда все пути)"""
    data = load_json(path)
    if "tree" in data:
        return IntreevalHypergraph.of(Digraph.from_dict(data["tree"]), data["hyperedges"])
    tree = Digraph.from_dict(data)
    return IntreevalHypergraph(tree, path_hypergraph(tree))


def build_poset(kind: str, path: str) -> FinitePoset:
    if kind == "asour":
        return asour_poset(load_hypergraph(path))
    d = load_graph(path)
    if kind == "orn":
        return orn_poset(d)
    if kind == "aorn":
        return aorn_poset(d)
    if kind == "areori":
        return areori_poset(transitive_closure(d))
    return rbi_poset(transitive_closure(d))


# --- подкоманды ---

def cmd_build(args) -> int:
    p = build_poset(args.kind, args.input)
    print(f"📊 {args.kind}: элементов {len(p)}, покрытий {len(p.covers)}, решётка: {p.is_lattice()}")
    if args.dot:
        with open(args.dot, 'w', encoding='utf-8') as f:
            f.write(poset_to_dot(p, name=args.kind))
        print(f"💾 DOT: {args.dot}")
    if args.json:
        write_json(poset_to_dict(p), args.json)
        print(f"💾 JSON: {args.json}")
    return EXIT_OK


def cmd_check(args) -> int:
    holds: bool
    detail: Optional[Any] = None
    if args.property in ("lattice", "semidistributive"):
        p = build_poset(args.poset, args.input)
        if args.property == "lattice":
            detail = p.lattice_counterexample()
            holds = detail is None
        else:
            holds = p.is_lattice() and is_semidistributive(p)
    elif args.property == "unstarred":
        classification = classify_tree(load_graph(args.input))
        holds, detail = not classification.starred, classification.witness
    elif args.property == "pic":
        detail = path_intersection_counterexample(load_intreeval(args.input))
        holds = detail is None
        if detail is not None:
            detail = [sorted(h) for h in detail]
    else:
        detail = star_sparse_witness(load_intreeval(args.input))
        holds = detail is None

    print(f"{'✅' if holds else '❌'} {args.property}: {holds}")
    if detail is not None:
        print(f"🔎 Свидетель: {detail}")
    return EXIT_OK if holds else EXIT_FAILED


def cmd_enumerate(args) -> int:
    if args.family == "broom":
        if args.m is None:
            print("❌ Для метлы нужен --m")
            return EXIT_USAGE
        print(broom_count(args.m, args.n))
        if args.csv:
            with open(args.csv, 'w', encoding='utf-8', newline='') as f:
                f.write(broom_table_csv(args.m, args.n))
            print(f"💾 CSV: {args.csv}")
        return EXIT_OK

    print(comb_count(args.n))
    if args.bijections:
        report = comb_bijections(args.n)
        print(json.dumps(report.to_dict(), ensure_ascii=False, sort_keys=True))
        return EXIT_OK if report.success else EXIT_FAILED
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.sample is not None:
        os.environ["ORNAMENT_INTREEVAL_SAMPLE_SIZE"] = str(args.sample)
    if args.workers is not None:
        os.environ["ORNAMENT_WORKERS"] = str(args.workers)
    get_config.cache_clear()

    report = run_suite(args.suite, args.n, args.seed)
    print(report.summary())
    for record in report.failures:
        print(f"❌ {record.name} @ {record.instance}: {record.witness}")
    if args.json:
        report.save(args.json)
        print(f"💾 Отчёт: {args.json}")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_fixtures(args) -> int:
    if args.action == "list":
        for name in fixture_names():
            print(name)
        return EXIT_OK
    if not args.name:
        print("❌ Укажите имя фикстуры")
        return EXIT_USAGE
    text = write_json(fixture(args.name).to_dict(), args.output)
    if not args.output:
        print(text, end="")
    return EXIT_OK


def cmd_polytope(args) -> int:
    sk = oriented_skeleton(load_hypergraph(args.input))
    p = skeleton_poset(sk)
    print(f"🔷 Вершин {len(sk.points)}, рёбер {sk.graph.number_of_edges()}, решётка: {p.is_lattice()}")
    if args.dot:
        with open(args.dot, 'w', encoding='utf-8') as f:
            f.write(sk.to_dot())
        print(f"💾 DOT: {args.dot}")
    if args.json:
        write_json(sk.to_dict(), args.json)
        print(f"💾 JSON: {args.json}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ornaments", description="Решётки орнаментаций, переориентаций и источников")
    parser.add_argument("--log-level", default="INFO", help="Уровень журнала (DEBUG, INFO, WARNING)")
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser("build", help="Построить частичный порядок")
    build.add_argument("kind", choices=POSETS)
    build.add_argument("--input", required=True)
    build.add_argument("--dot")
    build.add_argument("--json")
    build.set_defaults(handler=cmd_build)

    check = commands.add_parser("check", help="Проверить свойство")
    check.add_argument("property", choices=("lattice", "semidistributive", "unstarred", "pic", "star-sparse"))
    check.add_argument("--input", required=True)
    check.add_argument("--poset", choices=POSETS, default="aorn")
    check.set_defaults(handler=cmd_check)

    enumerate_ = commands.add_parser("enumerate", help="Числа орнаментаций метёл и гребёнок")
    enumerate_.add_argument("family", choices=("broom", "comb"))
    enumerate_.add_argument("--m", type=int)
    enumerate_.add_argument("--n", type=int, required=True)
    enumerate_.add_argument("--csv")
    enumerate_.add_argument("--bijections", action="store_true")
    enumerate_.set_defaults(handler=cmd_enumerate)

    verify = commands.add_parser("verify", help="Запустить набор проверок")
    verify.add_argument("suite", choices=suite_names())
    verify.add_argument("--n", type=int, default=5)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--sample", type=int)
    verify.add_argument("--workers", type=int)
    verify.add_argument("--json")
    verify.set_defaults(handler=cmd_verify)

    fixtures = commands.add_parser("fixtures", help="Каталог фикстур")
    fixtures.add_argument("action", choices=("list", "emit"))
    fixtures.add_argument("name", nargs="?")
    fixtures.add_argument("--output")
    fixtures.set_defaults(handler=cmd_fixtures)

    polytope = commands.add_parser("polytope", help="Гиперграфический многогранник")
    polytope.add_argument("action", choices=("skeleton",))
    polytope.add_argument("--input", required=True)
    polytope.add_argument("--dot")
    polytope.add_argument("--json")
    polytope.set_defaults(handler=cmd_polytope)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Точка входа CLI; возвращает код выхода"""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)

    try:
        return args.handler(args)
    except SizeGuardError as e:
        print(f"⛔ Превышен предел: {e}")
        return e.exit_code
    except OrnamentError as e:
        logger.error(f"Ошибка: {e}")
        print(f"❌ {type(e).__name__}: {e}")
        return e.exit_code
    except (OSError, KeyError, json.JSONDecodeError) as e:
        print(f"❌ Ошибка ввода: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
