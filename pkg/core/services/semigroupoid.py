"""
Semigroupoid - o semigrupoide Λ_{A,B} como sistema de reescrita

Forma padrão, composição parcial, divisibilidade, mínimo múltiplo comum e
partições finitas. As relações usadas são
    g_{i,j,n} h_j = g_{i,j,n+A}    h_i g_{i,j,n} = g_{i,j,n+B}
    g_{i,j,n} g_{j,k,m} = g_{i,j,n-A} g_{j,k,m+B}
"""

import logging
from typing import List, Optional, Sequence, Tuple, Union

from core.exceptions import CompositionError, DomainError, SemanticError
from core.models import (
    Edge,
    GAtom,
    GWord,
    HAtom,
    HPower,
    MatrixPair,
    RawWord,
    SgpElement,
    as_raw_word,
)
from core.services.matrix_core import satisfies_condition_E

logger = logging.getLogger(__name__)


def split_offset(n: int, a: int) -> Tuple[int, int]:
    """Escreve n = m + c·a com 1 <= m <= a; devolve (m, c)"""
    m = (n - 1) % a + 1
    return m, (n - m) // a


class Semigroupoid:
    """
    Λ_{A,B} para um par fixo

    Todas as operações recebem e devolvem elementos em forma padrão;
    `compose` devolve None quando a composição não está definida.
    """

    def __init__(self, pair: MatrixPair):
        self.pair = pair

    # ------------------------------------------------------------------
    # forma padrão
    # ------------------------------------------------------------------
    def _check_atom(self, atom: Union[HAtom, GAtom]) -> None:
        if isinstance(atom, HAtom):
            if not self.pair.has_vertex(atom.vertex):
                raise SemanticError(f"vertex {atom.vertex} out of range", atom=f"h({atom.vertex})")
            return
        for v in (atom.i, atom.j):
            if not self.pair.has_vertex(v):
                raise SemanticError(f"vertex {v} out of range", atom=f"g({atom.i},{atom.j},{atom.n})")
        if not self.pair.in_support(atom.i, atom.j):
            raise SemanticError(
                f"({atom.i},{atom.j}) is not in the support of A",
                atom=f"g({atom.i},{atom.j},{atom.n})",
            )

    @staticmethod
    def _atom_ends(atom: Union[HAtom, GAtom]) -> Tuple[int, int]:
        if isinstance(atom, HAtom):
            return atom.vertex, atom.vertex
        return atom.i, atom.j

    def standard_form(self, word: Sequence[Union[HAtom, GAtom, SgpElement]]) -> SgpElement:
        """
        Reduz uma palavra crua à forma padrão única

        Raises:
            CompositionError: átomos adjacentes não componíveis
            DomainError: palavra só de h com soma de expoentes <= 0
        """
        atoms: RawWord = as_raw_word(word)
        if not atoms:
            raise DomainError("palavra vazia")
        for atom in atoms:
            self._check_atom(atom)
        for left, right in zip(atoms, atoms[1:]):
            if self._atom_ends(left)[1] != self._atom_ends(right)[0]:
                raise CompositionError(f"{left} e {right} não são componíveis")

        leading = 0
        edges: List[List[int]] = []
        for atom in atoms:
            if isinstance(atom, HAtom):
                if edges:
                    i, j, _ = edges[-1]
                    edges[-1][2] += atom.exponent * self.pair.A(i, j)
                else:
                    leading += atom.exponent
            else:
                edges.append([atom.i, atom.j, atom.n])

        if not edges:
            if leading <= 0:
                raise DomainError(f"h({atoms[0].vertex})^{leading} não pertence a Λ_{{A,B}}")
            return HPower(atoms[0].vertex, leading)

        i, j, _ = edges[0]
        edges[0][2] += leading * self.pair.B(i, j)
        return GWord(self._sweep(edges))

    def _sweep(self, edges: List[List[int]]) -> Tuple[Edge, ...]:
        for idx in range(len(edges) - 1):
            i, j, n = edges[idx]
            m, carry = split_offset(n, self.pair.A(i, j))
            edges[idx][2] = m
            _, k, _ = edges[idx + 1]
            edges[idx + 1][2] += carry * self.pair.B(j, k)
        return tuple(tuple(e) for e in edges)

    def rewrite_step(self, word: RawWord, position: int, direction: int = 1) -> RawWord:
        """Aplica g_n g_m = g_{n-A} g_{m+B} (direction=1) ou o inverso nos átomos position, position+1"""
        left, right = word[position], word[position + 1]
        if not (isinstance(left, GAtom) and isinstance(right, GAtom)):
            raise DomainError("rewrite_step exige dois átomos g adjacentes")
        a = self.pair.A(left.i, left.j)
        b = self.pair.B(right.i, right.j)
        new_left = GAtom(left.i, left.j, left.n - direction * a)
        new_right = GAtom(right.i, right.j, right.n + direction * b)
        return word[:position] + (new_left, new_right) + word[position + 2:]

    # ------------------------------------------------------------------
    # composição
    # ------------------------------------------------------------------
    def compose(self, f: SgpElement, g: SgpElement) -> Optional[SgpElement]:
        if f.range != g.source:
            return None
        return self.standard_form((f, g))

    # ------------------------------------------------------------------
    # divisibilidade e mmc
    # ------------------------------------------------------------------
    def _same_prefix(self, f: GWord, g: GWord) -> bool:
        """Primeiras k-1 arestas iguais e k-ésimo arco igual, k = |f|"""
        k = len(f)
        if len(g) < k:
            return False
        if f.edges[:k - 1] != g.edges[:k - 1]:
            return False
        return f.edges[k - 1][:2] == g.edges[k - 1][:2]

    def divides(self, f: SgpElement, g: SgpElement) -> bool:
        if isinstance(f, HPower):
            if isinstance(g, HPower):
                return f.vertex == g.vertex and g.exponent >= f.exponent
            return g.source == f.vertex
        if isinstance(g, HPower) or not self._same_prefix(f, g):
            return False
        k = len(f)
        i, j, n = f.edges[-1]
        m = g.edges[k - 1][2]
        a = self.pair.A(i, j)
        if len(g) > k:
            return (n - m) % a == 0
        return m >= n and (m - n) % a == 0

    def intersects(self, f: SgpElement, g: SgpElement) -> bool:
        if isinstance(f, HPower) and isinstance(g, HPower):
            return f.vertex == g.vertex
        if isinstance(f, HPower):
            return f.vertex == g.source
        if isinstance(g, HPower):
            return g.vertex == f.source
        short, long_ = (f, g) if len(f) <= len(g) else (g, f)
        if not self._same_prefix(short, long_):
            return False
        i, j, n = short.edges[-1]
        m = long_.edges[len(short) - 1][2]
        return (n - m) % self.pair.A(i, j) == 0

    def lcm(self, f: SgpElement, g: SgpElement) -> Optional[SgpElement]:
        if not self.intersects(f, g):
            return None
        if isinstance(f, HPower) and isinstance(g, HPower):
            return f if f.exponent >= g.exponent else g
        if isinstance(f, HPower):
            return g
        if isinstance(g, HPower):
            return f
        if len(f) != len(g):
            return f if len(f) > len(g) else g
        return f if f.final_offset >= g.final_offset else g

    # ------------------------------------------------------------------
    # partições finitas
    # ------------------------------------------------------------------
    def finite_partition(self, root: int, h: SgpElement) -> List[SgpElement]:
        """
        Partição finita de Λ^{h_i} contendo h, pela expansão em árvore

        Args:
            root: vértice i
            h: elemento com origem i

        Returns:
            Lista de elementos dois a dois disjuntos que cobrem Λ^{h_i}
        """
        if h.source != root:
            raise DomainError(f"{h} não pertence a Λ^{{h_{root}}}")
        if isinstance(h, HPower):
            return [HPower(root, 1)]

        members: List[SgpElement] = []
        k = len(h)
        for depth in range(k - 1):
            prefix = h.edges[:depth]
            v = h.edges[depth][0]
            for edge in self.pair.edges_from(v):
                if edge != h.edges[depth]:
                    members.append(GWord(prefix + (edge,)))

        prefix = h.edges[:k - 1]
        v, w, final = h.edges[-1]
        window = (final - 1) // self.pair.A(v, w)
        for l in self.pair.omega(v):
            a = self.pair.A(v, l)
            for n in range(1, a + 1):
                members.append(GWord(prefix + ((v, l, n + window * a),)))
        logger.debug(f"🔍 partição de Λ^h_{root} com {len(members)} elementos")
        return members

    # ------------------------------------------------------------------
    # epimorfismo
    # ------------------------------------------------------------------
    def epic_counterexample(self) -> Optional[Tuple[SgpElement, SgpElement, SgpElement]]:
        """
        (g, h, f) com g ≠ h e g∘f = h∘f, ou None quando B satisfaz a Condição (E)
        """
        if satisfies_condition_E(self.pair):
            return None
        for i in self.pair.vertices:
            for j in self.pair.omega(i):
                if self.pair.B(i, j) == 0:
                    return HPower(i, 1), HPower(i, 2), GWord(((i, j, 1),))
        return None
