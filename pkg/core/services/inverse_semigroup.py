"""
Inverse Semigroup - S^{A,B} em forma normal s_I u^t s_J*

Relações usadas:
    u_i s_{i,j,n} = s_{i,j,n+B}     s_{i,j,n} u_j = s_{i,j,n+A}
    s_{i,j,n}* s_{i,j,n} = q_j      q_i = Σ s_{i,j,n} s_{i,j,n}*
Produtos são normalizados na hora, então igualdade é igualdade estrutural,
com uma exceção: quando o vértice v é origem de uma única aresta e de E_A,
q_v = s_e s_e* na álgebra mas as duas formas normais continuam
distintas. Essa identificação aparece em `PathSpace.germ_equal` e na ação,
não na forma normal.
"""

import logging
from math import gcd
from typing import Dict, List, Tuple

from core.exceptions import DomainError, SemanticError, StructuralError
from core.models import (
    ZERO,
    Edge,
    HPower,
    ISgElement,
    MatrixPair,
    PathWord,
    SgpElement,
    Triple,
)
from core.services.semigroupoid import split_offset

logger = logging.getLogger(__name__)


def _lcm(x: int, y: int) -> int:
    """mmc de geradores de subgrupos de Z; 0 representa {0}"""
    if x == 0 or y == 0:
        return 0
    return x * y // gcd(x, y)


def unitary_orders(pair: MatrixPair) -> Dict[int, int]:
    """
    d_v >= 0 tal que u_v^t = q_v exatamente quando d_v divide t

    Menor ponto fixo de: t serve em v sse, para toda aresta (v,j,n),
    A divide t·B e t·B/A serve em j. Linhas nulas de B dão d_v = 1.
    """
    orders = {v: 0 for v in pair.vertices}
    changed = True
    while changed:
        changed = False
        for v in pair.vertices:
            generator = 1
            for j in pair.omega(v):
                a, b = pair.A(v, j), pair.B(v, j)
                if b == 0:
                    edge_generator = 1
                elif orders[j] == 0:
                    edge_generator = 0
                else:
                    modulus = a * orders[j]
                    edge_generator = modulus // gcd(modulus, abs(b))
                generator = _lcm(generator, edge_generator)
            if generator != orders[v]:
                orders[v] = generator
                changed = True
    return orders


class InverseSemigroup:
    """S^{A,B} para um par fixo"""

    def __init__(self, pair: MatrixPair):
        self.pair = pair
        self.orders = unitary_orders(pair)

    # ------------------------------------------------------------------
    # construtores
    # ------------------------------------------------------------------
    def _require_vertex(self, v: int) -> None:
        if not self.pair.has_vertex(v):
            raise SemanticError(f"vertex {v} out of range")

    def triple(self, left: PathWord, exponent: int, right: PathWord) -> Triple:
        """Monta s_I u^t s_J* reduzindo o expoente pela ordem do unitário"""
        order = self.orders[left.range]
        if order:
            exponent %= order
        return Triple(left, exponent, right)

    def q(self, i: int) -> Triple:
        self._require_vertex(i)
        return Triple(PathWord.empty(i), 0, PathWord.empty(i))

    def u(self, i: int, t: int = 1) -> Triple:
        self._require_vertex(i)
        return self.triple(PathWord.empty(i), t, PathWord.empty(i))

    def s(self, i: int, j: int, n: int) -> Triple:
        """s_{i,j,n} para n inteiro qualquer: s_{i,j,m} u_j^c com n = m + c·A"""
        self._require_vertex(i)
        self._require_vertex(j)
        if not self.pair.in_support(i, j):
            raise SemanticError(f"({i},{j}) is not in the support of A", atom=f"s({i},{j},{n})")
        m, carry = split_offset(n, self.pair.A(i, j))
        return self.triple(PathWord(i, ((i, j, m),)), carry, PathWord.empty(j))

    def p(self, i: int, j: int, n: int) -> Triple:
        return self.range_projection(self.s(i, j, n))

    def path(self, word: PathWord) -> Triple:
        """s_I para um caminho reduzido"""
        self.check_path(word)
        return Triple(word, 0, PathWord.empty(word.range))

    def check_path(self, word: PathWord) -> None:
        self._require_vertex(word.base)
        for edge in word.edges:
            if not self.pair.is_edge(edge):
                raise SemanticError(f"edge {edge} is not an edge of E_A", atom=str(edge))

    def from_semigroupoid(self, f: SgpElement) -> Triple:
        """Imagem de h_i^t ↦ u_i^t, g_{i,j,n} ↦ s_{i,j,n}"""
        if isinstance(f, HPower):
            return self.u(f.vertex, f.exponent)
        result: ISgElement = self.q(f.source)
        for i, j, n in f.edges:
            result = self.multiply(result, self.s(i, j, n))
        return result

    def as_projection(self, f: SgpElement) -> Triple:
        """p_f = s_f s_f*, com p_{h_i^t} = q_i"""
        return self.range_projection(self.from_semigroupoid(f))

    # ------------------------------------------------------------------
    # algoritmo de transporte do unitário
    # ------------------------------------------------------------------
    def push_unitary(self, v: int, t: int, p: PathWord) -> Tuple[PathWord, int]:
        """
        u_v^t s_p = s_{p'} u_{r(p)}^{t'}

        Returns:
            (p', t') com p' reduzido
        """
        if p.base != v:
            raise StructuralError(f"caminho começa em {p.base}, não em {v}")
        out: List[Edge] = []
        carry = t
        for i, j, n in p.edges:
            m, carry = split_offset(n + carry * self.pair.B(i, j), self.pair.A(i, j))
            out.append((i, j, m))
        return PathWord(v, tuple(out)), carry

    # ------------------------------------------------------------------
    # operações do semigrupo inverso
    # ------------------------------------------------------------------
    def multiply(self, x: ISgElement, y: ISgElement) -> ISgElement:
        if x is ZERO or y is ZERO:
            return ZERO
        I, a, J = x.left, x.exponent, x.right
        K, b, L = y.left, y.exponent, y.right
        if J.is_prefix_of(K):
            tail = PathWord(J.range, K.edges[len(J):])
            pushed, c = self.push_unitary(J.range, a, tail)
            return self.triple(I.concat(pushed.edges), c + b, L)
        if K.is_prefix_of(J):
            tail = PathWord(K.range, J.edges[len(K):])
            pushed, c = self.push_unitary(K.range, -b, tail)
            return self.triple(I, a - c, L.concat(pushed.edges))
        return ZERO

    def product(self, *elements: ISgElement) -> ISgElement:
        if not elements:
            raise DomainError("produto vazio")
        result = elements[0]
        for element in elements[1:]:
            result = self.multiply(result, element)
        return result

    def power(self, x: ISgElement, k: int) -> ISgElement:
        if k < 1:
            raise DomainError("potências só para k >= 1")
        return self.product(*([x] * k))

    def star(self, x: ISgElement) -> ISgElement:
        if x is ZERO:
            return ZERO
        return self.triple(x.right, -x.exponent, x.left)

    @staticmethod
    def is_idempotent(x: ISgElement) -> bool:
        return x is ZERO or (x.exponent == 0 and x.left == x.right)

    def range_projection(self, x: ISgElement) -> ISgElement:
        return self.multiply(x, self.star(x))

    def source_projection(self, x: ISgElement) -> ISgElement:
        return self.multiply(self.star(x), x)

    def leq(self, e: ISgElement, f: ISgElement) -> bool:
        """Ordem natural entre idempotentes: e <= f sse e = e·f"""
        if not (self.is_idempotent(e) and self.is_idempotent(f)):
            raise DomainError("leq compara apenas idempotentes")
        return self.multiply(e, f) == e
