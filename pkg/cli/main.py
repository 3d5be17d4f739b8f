#!/usr/bin/env python3
"""
CLI do toolkit Katsura

Códigos de saída:
    0  sucesso
    1  erro de validação, semântico, de domínio ou interno
    2  erro de sintaxe
    3  --strict com algum veredicto Unknown
Erros vão para stderr como uma linha JSON com o campo `kind`.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from core.config import get_settings
from core.exceptions import CompositionError, DomainError, KatsuraError, ParseError, SemanticError
from core.models import ZERO, AnalysisCaps, AnalysisReport, EventuallyPeriodicPath, MatrixPair, Tri, Triple
from core.services import decisions, expressions, ktheory
from core.services.inverse_semigroup import InverseSemigroup
from core.services.path_space import PathSpace
from core.services.semigroupoid import Semigroupoid

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_UNKNOWN = 3


def configure_logging() -> None:
    settings = get_settings()
    logging.basicConfig(
        level=getattr(logging, settings.LOG_LEVEL),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError("deve ser um inteiro positivo")
    return number


def _emit_error(payload: Dict) -> None:
    print(json.dumps(payload, ensure_ascii=False, default=str), file=sys.stderr)


# ----------------------------------------------------------------------
# auxiliares
# ----------------------------------------------------------------------
def load_pair(path: str) -> MatrixPair:
    return expressions.parse_matrix_file(Path(path).read_bytes())


def _inverse(text: str, pair: MatrixPair, semigroup: InverseSemigroup):
    """Lê nas duas gramáticas e leva elementos do semigrupoide para S^{A,B}"""
    element = expressions.parse_element(text, pair)
    if element is ZERO or isinstance(element, Triple):
        return element
    return semigroup.from_semigroupoid(element)


def _point(text: str, space: PathSpace) -> EventuallyPeriodicPath:
    x = expressions.parse_point(text)
    return space.point(x.preperiod, x.period.edges)


def _matrix_lines(name: str, matrix) -> List[str]:
    width = max(len(str(v)) for row in matrix for v in row)
    lines = [f"{name} ="]
    lines.extend("  [" + " ".join(str(v).rjust(width) for v in row) + "]" for row in matrix)
    return lines


def format_report(report: AnalysisReport) -> str:
    lines = []
    for name, verdict in report.verdicts().items():
        tags = ", ".join(verdict.tags)
        lines.append(f"{name}: {verdict.value.value}" + (f"  [{tags}]" if tags else ""))
    if report.kgroups is not None:
        lines.append(f"K0 = {report.kgroups.k0}")
        lines.append(f"K1 = {report.kgroups.k1}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


# ----------------------------------------------------------------------
# comandos
# ----------------------------------------------------------------------
def cmd_validate(args) -> int:
    load_pair(args.file)
    print("ok")
    return EXIT_OK


def cmd_analyze(args) -> int:
    pair = load_pair(args.file)
    caps = AnalysisCaps.from_settings(depth_cap=args.depth_cap, probe_l=args.probe_l)
    report = decisions.analyze(pair, caps)
    if args.json:
        print(json.dumps(report.to_dict(), ensure_ascii=False))
    else:
        print(format_report(report))
    if args.strict and report.has_unknown():
        unknown = [name for name, v in report.verdicts().items() if v.value == Tri.UNKNOWN]
        _emit_error({"kind": "unknown", "message": "strict mode: undecided verdicts", "fields": unknown})
        return EXIT_UNKNOWN
    return EXIT_OK


def cmd_kgroups(args) -> int:
    result = ktheory.k_groups(load_pair(args.file))
    if args.json:
        print(json.dumps(result.to_dict(), ensure_ascii=False))
    else:
        print(f"K0 = {result.k0}")
        print(f"K1 = {result.k1}")
    return EXIT_OK


def cmd_realize(args) -> int:
    g0 = expressions.parse_group(args.k0)
    g1 = expressions.parse_group(args.k1)
    result = ktheory.realize(g0, g1)
    if args.json:
        print(json.dumps(result.to_dict(), ensure_ascii=False))
        return EXIT_OK
    lines = [f"N = {result.pair.n}"]
    lines += _matrix_lines("A", result.pair.a)
    lines += _matrix_lines("B", result.pair.b)
    lines.append(f"K0 = {result.kgroups.k0}")
    lines.append(f"K1 = {result.kgroups.k1}")
    lines += [f"certificate {key}: {'ok' if value else 'FAILED'}" for key, value in result.certificate.items()]
    print("\n".join(lines))
    return EXIT_OK


def cmd_normalize(args) -> int:
    if args.raw:
        print(expressions.format_raw(args.expr))
        return EXIT_OK
    pair = load_pair(args.file)
    print(expressions.format_element(expressions.parse_element(args.expr, pair)))
    return EXIT_OK


def cmd_mul(args) -> int:
    pair = load_pair(args.file)
    grammar = expressions.detect_grammar(args.left + " " + args.right)
    x = expressions.parse_element(args.left, pair, grammar)
    y = expressions.parse_element(args.right, pair, grammar)
    if grammar == expressions.SEMIGROUPOID:
        product = Semigroupoid(pair).compose(x, y)
        if product is None:
            raise CompositionError(
                "composição indefinida: r(f) ≠ s(g)",
                left=expressions.format_element(x),
                right=expressions.format_element(y),
            )
    else:
        product = InverseSemigroup(pair).multiply(x, y)
    print(expressions.format_element(product))
    return EXIT_OK


def cmd_lcm(args) -> int:
    pair = load_pair(args.file)
    grammar = expressions.SEMIGROUPOID
    f = expressions.parse_element(args.left, pair, grammar)
    g = expressions.parse_element(args.right, pair, grammar)
    result = Semigroupoid(pair).lcm(f, g)
    print("none" if result is None else expressions.format_element(result))
    return EXIT_OK


def cmd_act(args) -> int:
    pair = load_pair(args.file)
    space = PathSpace(pair)
    s = _inverse(args.expr, pair, space.semigroup)
    target = expressions.parse_path(args.path)
    if isinstance(target, EventuallyPeriodicPath):
        x = space.point(target.preperiod, target.period.edges)
        depth = args.depth or get_settings().ACT_DEPTH
        print(expressions.format_action(space.act_on_periodic(s, x, depth)))
    else:
        space.semigroup.check_path(target)
        print(expressions.format_action(space.act_on_prefix(s, target)))
    return EXIT_OK


def cmd_fixedpoint(args) -> int:
    pair = load_pair(args.file)
    space = PathSpace(pair)
    s = _inverse(args.expr, pair, space.semigroup)
    if s is ZERO:
        raise DomainError("o zero não tem pontos fixos")
    prefix = space.generate_fixed_point(s, args.depth)
    print("none" if prefix is None else expressions.format_path(prefix))
    return EXIT_OK


def cmd_germ_eq(args) -> int:
    pair = load_pair(args.file)
    space = PathSpace(pair)
    s = _inverse(args.left, pair, space.semigroup)
    t = _inverse(args.right, pair, space.semigroup)
    if s is ZERO or t is ZERO:
        raise SemanticError("germes exigem elementos não nulos")
    x = _point(args.at, space)
    print(space.germ_equal(s, t, x, args.depth_cap).value)
    return EXIT_OK


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(prog="katsura", description=f"{settings.APP_NAME} {settings.VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="Confere a Condição (0)")
    p.add_argument("file")
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("analyze", help="Relatório de decisões tri-valoradas")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--strict", action="store_true", help="Sai com 3 se algum veredicto for unknown")
    p.add_argument("--depth-cap", type=_positive, default=None)
    p.add_argument("--probe-l", type=_positive, default=None)
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("kgroups", help="K_0 e K_1 de O_{A,B}")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_kgroups)

    p = sub.add_parser("realize", help="Par (A,B) com K-grupos prescritos")
    p.add_argument("--k0", required=True)
    p.add_argument("--k1", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_realize)

    p = sub.add_parser("normalize", help="Forma padrão / forma normal")
    p.add_argument("expr")
    p.add_argument("file")
    p.add_argument("--raw", action="store_true", help="Ecoa a expressão sem normalizar")
    p.set_defaults(handler=cmd_normalize)

    p = sub.add_parser("mul", help="Produto (ou composição no semigrupoide)")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("file")
    p.set_defaults(handler=cmd_mul)

    p = sub.add_parser("lcm", help="Mínimo múltiplo comum no semigrupoide")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("file")
    p.set_defaults(handler=cmd_lcm)

    p = sub.add_parser("act", help="Ação em um prefixo ou ponto eventualmente periódico")
    p.add_argument("expr")
    p.add_argument("path")
    p.add_argument("file")
    p.add_argument("--depth", type=_positive, default=None)
    p.set_defaults(handler=cmd_act)

    p = sub.add_parser("fixedpoint", help="Prefixo do ponto fixo gerado por um ciclo")
    p.add_argument("expr")
    p.add_argument("file")
    p.add_argument("--depth", type=_positive, required=True)
    p.set_defaults(handler=cmd_fixedpoint)

    p = sub.add_parser("germ-eq", help="Igualdade de germes em um ponto")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--at", required=True)
    p.add_argument("file")
    p.add_argument("--depth-cap", type=_positive, default=None)
    p.set_defaults(handler=cmd_germ_eq)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK

    handler: Callable = args.handler
    try:
        return handler(args)
    except ParseError as e:
        _emit_error(e.to_dict())
        return EXIT_PARSE
    except KatsuraError as e:
        logger.debug(f"❌ {e.kind}: {e.message}")
        _emit_error(e.to_dict())
        return EXIT_ERROR
    except OSError as e:
        _emit_error({"kind": "io", "message": str(e)})
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
