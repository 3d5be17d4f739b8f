"""
Expressions - leitura e escrita das gramáticas textuais

Gramáticas suportadas:
- par de matrizes: JSON {"N": int, "A": [[int]], "B": [[int]]}
- semigrupoide: h(i), h(i)^t, g(i,j,n) unidos por '.'
- semigrupo inverso: s(i,j,n), u(i), u(i)^t, q(i), 0, '*' pós-fixo,
  parênteses e '.' para produto
- caminhos: [(i,j,n), ...], []@i e pontos 'pre ~ per'
- grupos: Z, Z^r, Z/d unidos por '+', ou 0

Toda leitura normaliza na hora; a forma crua fica disponível para --raw.
"""

import json
import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from core.exceptions import ParseError, ValidationError
from core.models import (
    ZERO,
    AbelianGroup,
    Edge,
    EventuallyPeriodicPath,
    GAtom,
    GWord,
    HAtom,
    HPower,
    ISgElement,
    MatrixPair,
    NeedLongerPrefix,
    PathWord,
    PrefixResult,
    RawWord,
    SgpElement,
    Triple,
)
from core.services import matrix_core
from core.services.inverse_semigroup import InverseSemigroup
from core.services.ktheory import group_from_summands
from core.services.semigroupoid import Semigroupoid

logger = logging.getLogger(__name__)

SEMIGROUPOID = "semigroupoid"
INVERSE = "inverse"

TOKEN_PATTERN = re.compile(
    r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z]+)|(?P<punct>[()\[\],.*^~@+/]))"
)


# ----------------------------------------------------------------------
# tokenização
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = TOKEN_PATTERN.match(text, position)
        if not match:
            start = position + len(text[position:]) - len(text[position:].lstrip())
            raise ParseError(f"caractere inesperado {text[start]!r}", start, "token", text)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    """Descida recursiva sobre a lista de tokens"""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def fail(self, expected: str) -> ParseError:
        token = self.current
        found = token.value or "fim da entrada"
        return ParseError(f"esperado {expected}, encontrado {found!r}", token.position, expected, self.text)

    def at(self, value: str) -> bool:
        return self.current.kind != "end" and self.current.value == value

    def accept(self, value: str) -> bool:
        if self.at(value):
            self.index += 1
            return True
        return False

    def expect(self, value: str) -> Token:
        if not self.at(value):
            raise self.fail(f"'{value}'")
        token = self.current
        self.index += 1
        return token

    def integer(self) -> int:
        if self.current.kind != "int":
            raise self.fail("inteiro")
        value = int(self.current.value)
        self.index += 1
        return value

    def name(self, *allowed: str) -> str:
        token = self.current
        if token.kind != "name" or token.value not in allowed:
            raise self.fail(" ou ".join(allowed))
        self.index += 1
        return token.value

    def arguments(self, count: int) -> Tuple[int, ...]:
        self.expect("(")
        values = [self.integer()]
        for _ in range(count - 1):
            self.expect(",")
            values.append(self.integer())
        self.expect(")")
        return tuple(values)

    def finish(self) -> None:
        if self.current.kind != "end":
            raise self.fail("fim da entrada")


# ----------------------------------------------------------------------
# arquivo de matrizes
# ----------------------------------------------------------------------
def parse_matrix_file(data: Union[bytes, str]) -> MatrixPair:
    """
    Lê e valida um par (A,B)

    Raises:
        ParseError: UTF-8 inválido, JSON malformado ou chaves ausentes
        StructuralError: dimensões incompatíveis com N
        ValidationError: Condição (0) violada
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"arquivo não é UTF-8 válido: {e.reason}", e.start, "UTF-8", data)
    else:
        text = data
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"JSON inválido: {e.msg}", e.pos, "JSON", text)
    if not isinstance(payload, dict):
        raise ParseError("esperado um objeto JSON", 0, "objeto {N, A, B}", text)
    missing = [key for key in ("N", "A", "B") if key not in payload]
    if missing:
        raise ParseError(f"chaves ausentes: {', '.join(missing)}", 0, "chaves N, A, B", text)

    pair = MatrixPair.from_lists(payload["A"], payload["B"], n=payload["N"])
    report = matrix_core.validate(pair)
    if not report.ok:
        raise ValidationError(report.violations)
    logger.debug(f"par carregado com N={pair.n}")
    return pair


# ----------------------------------------------------------------------
# semigrupoide
# ----------------------------------------------------------------------
def parse_raw_word(text: str) -> RawWord:
    parser = _Parser(text)
    atoms = [_raw_atom(parser)]
    while parser.accept("."):
        atoms.append(_raw_atom(parser))
    parser.finish()
    return tuple(atoms)


def _raw_atom(parser: _Parser) -> Union[HAtom, GAtom]:
    if parser.name("h", "g") == "h":
        (vertex,) = parser.arguments(1)
        exponent = parser.integer() if parser.accept("^") else 1
        return HAtom(vertex, exponent)
    return GAtom(*parser.arguments(3))


def parse_semigroupoid_element(text: str, pair: MatrixPair) -> SgpElement:
    return Semigroupoid(pair).standard_form(parse_raw_word(text))


# ----------------------------------------------------------------------
# semigrupo inverso
# ----------------------------------------------------------------------
# Nós da árvore: ("s", i, j, n), ("u", i, t), ("q", i), ("0",),
# ("star", nó), ("prod", (nós...))
Node = tuple


def parse_inverse_tree(text: str) -> Node:
    parser = _Parser(text)
    node = _product(parser)
    parser.finish()
    return node


def _product(parser: _Parser) -> Node:
    factors = [_factor(parser)]
    while parser.accept("."):
        factors.append(_factor(parser))
    return factors[0] if len(factors) == 1 else ("prod", tuple(factors))


def _factor(parser: _Parser) -> Node:
    node = _primary(parser)
    while parser.accept("*"):
        node = ("star", node)
    return node


def _primary(parser: _Parser) -> Node:
    if parser.accept("("):
        node = _product(parser)
        parser.expect(")")
        return node
    if parser.current.kind == "int":
        if parser.current.value != "0":
            raise parser.fail("'0'")
        parser.index += 1
        return ("0",)
    kind = parser.name("s", "u", "q")
    if kind == "s":
        return ("s",) + parser.arguments(3)
    (vertex,) = parser.arguments(1)
    if kind == "u":
        return ("u", vertex, parser.integer() if parser.accept("^") else 1)
    return ("q", vertex)


def evaluate(node: Node, semigroup: InverseSemigroup) -> ISgElement:
    kind = node[0]
    if kind == "0":
        return ZERO
    if kind == "s":
        return semigroup.s(*node[1:])
    if kind == "u":
        return semigroup.u(node[1], node[2])
    if kind == "q":
        return semigroup.q(node[1])
    if kind == "star":
        return semigroup.star(evaluate(node[1], semigroup))
    return semigroup.product(*(evaluate(child, semigroup) for child in node[1]))


def parse_inverse_element(text: str, pair: MatrixPair) -> ISgElement:
    return evaluate(parse_inverse_tree(text), InverseSemigroup(pair))


def detect_grammar(text: str) -> str:
    return SEMIGROUPOID if re.search(r"\b[gh]\s*\(", text) else INVERSE


def parse_element(text: str, pair: MatrixPair, grammar: Optional[str] = None) -> Union[SgpElement, ISgElement]:
    """Elemento normalizado; a gramática é detectada quando não informada"""
    grammar = grammar or detect_grammar(text)
    if grammar == SEMIGROUPOID:
        return parse_semigroupoid_element(text, pair)
    return parse_inverse_element(text, pair)


# ----------------------------------------------------------------------
# caminhos
# ----------------------------------------------------------------------
def _edge_list(parser: _Parser) -> Tuple[Edge, ...]:
    parser.expect("[")
    edges: List[Edge] = []
    if not parser.at("]"):
        edges.append(parser.arguments(3))
        while parser.accept(","):
            edges.append(parser.arguments(3))
    parser.expect("]")
    return tuple(edges)


def _finite(parser: _Parser, allow_bare_empty: bool) -> Optional[PathWord]:
    start = parser.current
    edges = _edge_list(parser)
    if edges:
        try:
            return PathWord.of(edges)
        except ValueError as e:
            raise ParseError(str(e), start.position, "caminho encadeado", parser.text)
    if parser.accept("@"):
        return PathWord.empty(parser.integer())
    if allow_bare_empty:
        return None
    raise parser.fail("'@' seguido do vértice do caminho vazio")


def parse_finite_path(text: str) -> PathWord:
    parser = _Parser(text)
    path = _finite(parser, allow_bare_empty=False)
    parser.finish()
    return path


def parse_point(text: str) -> EventuallyPeriodicPath:
    """'pre ~ per'; o pré-período pode ser [] ou []@i"""
    parser = _Parser(text)
    pre = _finite(parser, allow_bare_empty=True)
    parser.expect("~")
    start = parser.current
    period = _edge_list(parser)
    parser.finish()
    if not period:
        raise ParseError("período vazio", start.position, "ciclo não vazio", text)
    if pre is None:
        pre = PathWord.empty(period[0][0])
    try:
        return EventuallyPeriodicPath.build(pre, period)
    except ValueError as e:
        raise ParseError(str(e), start.position, "ciclo no fim do pré-período", text)


def parse_path(text: str) -> Union[PathWord, EventuallyPeriodicPath]:
    return parse_point(text) if "~" in text else parse_finite_path(text)


# ----------------------------------------------------------------------
# grupos
# ----------------------------------------------------------------------
def parse_group(text: str) -> AbelianGroup:
    """Z^2 + Z/2 + Z/6 → invariantes normalizados"""
    parser = _Parser(text)
    if parser.current.kind == "int" and parser.current.value == "0":
        parser.index += 1
        parser.finish()
        return AbelianGroup()
    free, orders = 0, []
    while True:
        parser.name("Z")
        if parser.accept("^"):
            token = parser.current
            rank = parser.integer()
            if rank < 0:
                raise ParseError("posto negativo", token.position, "posto >= 0", text)
            free += rank
        elif parser.accept("/"):
            token = parser.current
            order = parser.integer()
            if order < 1:
                raise ParseError("ordem inválida", token.position, "ordem >= 1", text)
            orders.append(order)
        else:
            free += 1
        if not parser.accept("+"):
            break
    parser.finish()
    return group_from_summands(free, orders)


# ----------------------------------------------------------------------
# formatação
# ----------------------------------------------------------------------
def _edge(edge: Edge) -> str:
    return f"({edge[0]},{edge[1]},{edge[2]})"


def format_path(path: PathWord) -> str:
    if not path.edges:
        return f"[]@{path.base}"
    return "[" + ", ".join(_edge(e) for e in path.edges) + "]"


def format_point(x: EventuallyPeriodicPath) -> str:
    pre = "[]" if not x.preperiod.edges else format_path(x.preperiod)
    return f"{pre} ~ {format_path(x.period)}"


def _s_atoms(path: PathWord) -> List[str]:
    return [f"s{_edge(e)}" for e in path.edges]


def format_element(e: Union[SgpElement, ISgElement]) -> str:
    if e is ZERO:
        return "0"
    if isinstance(e, HPower):
        return f"h({e.vertex})" if e.exponent == 1 else f"h({e.vertex})^{e.exponent}"
    if isinstance(e, GWord):
        return ".".join(f"g{_edge(edge)}" for edge in e.edges)
    if not isinstance(e, Triple):
        raise TypeError(f"elemento desconhecido: {e!r}")

    parts = _s_atoms(e.left)
    if e.exponent:
        unitary = f"u({e.vertex})"
        parts.append(unitary if e.exponent == 1 else f"{unitary}^{e.exponent}")
    right = _s_atoms(e.right)
    if len(right) == 1:
        parts.append(right[0] + "*")
    elif right:
        parts.append("(" + ".".join(right) + ")*")
    return ".".join(parts) if parts else f"q({e.vertex})"


def format_raw_word(word: RawWord) -> str:
    atoms = []
    for atom in word:
        if isinstance(atom, HAtom):
            atoms.append(f"h({atom.vertex})" if atom.exponent == 1 else f"h({atom.vertex})^{atom.exponent}")
        else:
            atoms.append(f"g({atom.i},{atom.j},{atom.n})")
    return ".".join(atoms)


def format_tree(node: Node) -> str:
    kind = node[0]
    if kind == "0":
        return "0"
    if kind == "s":
        return f"s({node[1]},{node[2]},{node[3]})"
    if kind == "u":
        return f"u({node[1]})" if node[2] == 1 else f"u({node[1]})^{node[2]}"
    if kind == "q":
        return f"q({node[1]})"
    if kind == "star":
        inner = format_tree(node[1])
        return f"({inner})*" if node[1][0] == "prod" else f"{inner}*"
    return ".".join(format_tree(child) for child in node[1])


def format_raw(text: str) -> str:
    """Eco não normalizado para --raw"""
    if detect_grammar(text) == SEMIGROUPOID:
        return format_raw_word(parse_raw_word(text))
    return format_tree(parse_inverse_tree(text))


def format_action(result) -> str:
    if result is ZERO:
        return "0"
    if isinstance(result, NeedLongerPrefix):
        return "need-longer-prefix"
    if isinstance(result, PrefixResult):
        return f"{format_path(result.prefix)} residual={result.residual_exponent}"
    return format_path(result)
