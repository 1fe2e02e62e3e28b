import typing as t
import sys
import json
import argparse
import logging

from .workspace import (
    Workspace, load_workspace, dump_workspace, container_to_json, morphism_to_json, morphism_from_json,
    reduction_to_json, reduction_from_json, witness_to_json, witness_from_json,
)
from .expr import evaluate
from ..containers import Container, search_morphism, require_same_kind
from ..weihrauch import (
    FiniteProblem, ExtendedPredicate, reduce_problems, verify_reduction, search_ext_reduction,
    ext_reduce_verify, as_container, degree_poset,
)
from ..operators import poly_cardinality
from ..laws import all_suites, find_suite
from ..pca import Term
from ..typing import Settings, merge_settings
from ..errors import WorkspaceError
from ..utils import enable_debug_mode

logger = logging.getLogger("WeiContainers")

EXIT_VERDICT = {"REDUCIBLE": 0, "NOT-REDUCIBLE": 1, "UNKNOWN-AT-BOUND": 2}
EXIT_USAGE = 64


def version() -> 'str':
    from .. import __version__
    return __version__

def _emit(text: 'str'):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")

def _emit_json(data: 't.Any'):
    _emit(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))

def _overrides(args: 'argparse.Namespace') -> 'Settings':
    return {key: getattr(args, key, None) for key in ("bound", "budget", "seed", "sizes")}

def _binding_kind(value: 't.Any') -> 'str':
    if isinstance(value, FiniteProblem):
        return "problem"
    if isinstance(value, ExtendedPredicate):
        return "predicate"
    if isinstance(value, Container):
        return "container"
    return "term"


def _reduce(ws: 'Workspace', a: 'str', b: 'str') -> 'dict':
    p, q = ws[a], ws[b]
    kinds = {_binding_kind(p), _binding_kind(q)}
    if "term" in kinds:
        raise WorkspaceError(f"Terms cannot be compared, `{a}` and `{b}` must be problems, predicates or containers")

    bound, budget = ws.settings["bound"], ws.budget
    report = {
        "version": version(),
        "command": "reduce",
        "source": a,
        "target": b,
        "settings": {"bound": bound, "budget": budget.max_steps},
    }

    if kinds == {"problem"}:
        r = reduce_problems(p, q)
        report.update(type="problem", verdict="REDUCIBLE" if r else "NOT-REDUCIBLE")
        if r is not None:
            report["witness"] = reduction_to_json(r)
        return report

    if kinds == {"predicate"}:
        w = search_ext_reduction(p, q, bound, budget)
        report.update(type="predicate", verdict="REDUCIBLE" if w else "UNKNOWN-AT-BOUND")
        if w is not None:
            report["witness"] = witness_to_json(w)
        return report

    result = search_morphism(as_container(p, budget), as_container(q, budget), bound, budget)
    report.update(type="container", verdict=result.verdict)
    if result.found:
        report["witness"] = morphism_to_json(result.morphism)
    return report

def _verify(ws: 'Workspace', a: 'str', b: 'str', path: 'str') -> 'tuple[bool, str]':
    try:
        with open(path, encoding="utf-8") as file:
            report = json.load(file)
    except (OSError, json.JSONDecodeError) as e:
        logger.error(f"Cannot read witness {path}")
        raise WorkspaceError(f"Cannot read witness {path}: {e}") from e

    if "witness" not in report:
        return False, f"{path} carries no witness"

    p, q, data = ws[a], ws[b], report["witness"]
    kind = report.get("type", "container")
    try:
        if kind == "problem":
            ok = verify_reduction(p, q, reduction_from_json(p, q, data))
        elif kind == "predicate":
            ok = ext_reduce_verify(p, q, witness_from_json(data, ws.budget))
        else:
            morphism_from_json(as_container(p, ws.budget), as_container(q, ws.budget), data, ws.budget)
            ok = True
    except (KeyError, ValueError) as e:
        logger.debug(f"Witness rejected: {e!r}")
        return False, str(e)
    return ok, ""


def cmd_reduce(args: 'argparse.Namespace') -> 'int':
    ws = load_workspace(args.workspace, _overrides(args))
    if args.verify:
        ok, detail = _verify(ws, args.a, args.b, args.verify)
        if args.json:
            _emit_json({"version": version(), "command": "verify", "source": args.a, "target": args.b,
                        "verified": ok, "detail": detail})
        else:
            _emit(f"{args.a} <= {args.b}: {'VERIFIED' if ok else 'REJECTED'}" + (f" ({detail})" if detail else ""))
        return 0 if ok else 1

    report = _reduce(ws, args.a, args.b)
    logger.info(f"{args.a} <= {args.b}: {report['verdict']}")
    if args.json:
        _emit_json(report)
    else:
        settings = report["settings"]
        _emit(f"{args.a} <= {args.b}: {report['verdict']}")
        if report["verdict"] == "UNKNOWN-AT-BOUND":
            _emit(f"no witness with codes of size <= {settings['bound']} within {settings['budget']} steps")
        if "witness" in report:
            _emit(json.dumps(report["witness"], sort_keys=True, ensure_ascii=False))
        _emit(f"WeiContainers {report['version']}")
    return EXIT_VERDICT[report["verdict"]]

def cmd_expr(args: 'argparse.Namespace') -> 'int':
    ws = load_workspace(args.workspace, _overrides(args))
    env = {name: value for name, value in ws.bindings.items() if not isinstance(value, Term)}
    container = evaluate(args.expression, env, ws.budget)
    ws.bind(args.name, container)

    report = {
        "version": version(),
        "command": "expr",
        "name": args.name,
        "expression": args.expression,
        "container": container_to_json(container),
    }
    if args.eval is not None:
        report["cardinality"] = poly_cardinality(container, args.eval)
    if args.out:
        dump_workspace(ws, args.out)
        logger.info(f"Wrote workspace with `{args.name}` to {args.out}")

    if args.json:
        _emit_json(report)
    else:
        _emit(f"{args.name} = {container}")
        if args.eval is not None:
            _emit(f"|[{args.name}]({args.eval})| = {report['cardinality']}")
    return 0

def cmd_laws(args: 'argparse.Namespace') -> 'int':
    settings = merge_settings(_overrides(args))
    suites = [find_suite(name) for name in args.suites] if args.suites else all_suites()
    reports = [suite(settings).run() for suite in suites]
    failures = sum(len(r.failures) for r in reports)

    if args.json:
        _emit_json({
            "version": version(),
            "command": "laws",
            "settings": dict(settings),
            "suites": [
                {"suite": r.suite, "passed": r.passed,
                 "results": [{"law": c.law, "passed": c.passed, "detail": c.detail} for c in r.results]}
                for r in reports
            ],
        })
    else:
        _emit(f"sizes {settings['sizes']}, bound {settings['bound']}, budget {settings['budget']}, seed {settings['seed']}")
        for r in reports:
            for line in r.lines():
                _emit(line)
        checks = sum(len(r.results) for r in reports)
        _emit(f"{checks} checks, {failures} failures (seed {settings['seed']}, WeiContainers {version()})")
    return 1 if failures else 0

def cmd_poset(args: 'argparse.Namespace') -> 'int':
    ws = load_workspace(args.workspace, _overrides(args))
    items = {name: ws[name] for name in sorted(set(args.names))}
    containers = {name: as_container(item, ws.budget) for name, item in items.items()}
    require_same_kind(*containers.values())

    poset = degree_poset(containers, ws.settings["bound"], ws.budget)
    dot = poset.to_dot(comment=f"WeiContainers {version()}")
    if not args.dot:
        _emit(dot)
        return 0

    try:
        with open(args.dot, "w", encoding="utf-8") as file:
            file.write(dot)
    except OSError as e:
        logger.error(f"Cannot write {args.dot}")
        raise WorkspaceError(f"Cannot write {args.dot}: {e}") from e
    for c in poset.classes:
        _emit(" ~ ".join(c))
    return 0


def _search_flags(parser: 'argparse.ArgumentParser'):
    parser.add_argument("--bound", type=int, help="Largest tracking code size searched")
    parser.add_argument("--budget", type=int, help="Reduction steps per evaluation")

def build_parser() -> 'argparse.ArgumentParser':
    parser = argparse.ArgumentParser(prog="WeiContainers", description="Reducibility of problems as containers")
    parser.add_argument("--version", action="version", version=f"%(prog)s {version()}")
    parser.add_argument("--debug", action="store_true", help="Log every search step")
    commands = parser.add_subparsers(dest="command", required=True)

    reduce = commands.add_parser("reduce", help="Search for a reduction of A to B")
    reduce.add_argument("workspace")
    reduce.add_argument("a")
    reduce.add_argument("b")
    _search_flags(reduce)
    reduce.add_argument("--json", action="store_true")
    reduce.add_argument("--verify", metavar="WITNESSFILE", help="Re-verify the witness of a JSON report")
    reduce.set_defaults(run=cmd_reduce)

    expr = commands.add_parser("expr", help="Evaluate an operator expression")
    expr.add_argument("workspace")
    expr.add_argument("expression")
    expr.add_argument("--name", default="_", help="Name to bind the result to")
    expr.add_argument("--out", help="Write the extended workspace here")
    expr.add_argument("--eval", type=int, metavar="N", help="Cardinality of the polynomial at an N-element set")
    _search_flags(expr)
    expr.add_argument("--json", action="store_true")
    expr.set_defaults(run=cmd_expr)

    laws = commands.add_parser("laws", help="Run law suites")
    laws.add_argument("suites", nargs="*", help=", ".join(s.name for s in all_suites()))
    laws.add_argument("--seed", type=int)
    laws.add_argument("--sizes", type=int)
    _search_flags(laws)
    laws.add_argument("--json", action="store_true")
    laws.set_defaults(run=cmd_laws)

    poset = commands.add_parser("poset", help="Degree poset of bindings as DOT")
    poset.add_argument("workspace")
    poset.add_argument("names", nargs="+")
    poset.add_argument("--dot", metavar="PATH")
    _search_flags(poset)
    poset.set_defaults(run=cmd_poset)
    return parser

def main(argv: 't.Optional[t.Sequence[str]]' = None) -> 'int':
    args = build_parser().parse_args(argv)
    if args.debug:
        logging.basicConfig()
        enable_debug_mode()

    try:
        return args.run(args)
    except (ValueError, TypeError) as e:
        logger.error(f"{args.command} failed: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
