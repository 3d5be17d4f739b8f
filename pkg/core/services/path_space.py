"""
Path Space - o espaço X_A e a ação parcial de S^{A,B}

Pontos computáveis são caminhos eventualmente periódicos; prefixos finitos
fazem o papel de cilindros. Aqui vivem a ação por multiplicação à esquerda,
a geração e a decisão de pontos fixos, a busca de cilindros fixos e a
aritmética de germes.
"""

import logging
from collections import deque
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from core.config import get_settings
from core.exceptions import DomainError, StructuralError
from core.models import (
    ZERO,
    CylinderVerdict,
    Edge,
    EventuallyPeriodicPath,
    FixedPointTrace,
    Germ,
    GermComparison,
    ISgElement,
    MatrixPair,
    NeedLongerPrefix,
    PathWord,
    PrefixResult,
    Tri,
    Triple,
    ZeroElement,
)
from core.services.inverse_semigroup import InverseSemigroup
from core.services.matrix_core import reachable_arcs
from core.services.semigroupoid import split_offset

logger = logging.getLogger(__name__)

ActionResult = Union[ZeroElement, NeedLongerPrefix, PrefixResult]
State = Tuple[int, Fraction]


def is_subcylinder(inner: PathWord, outer: PathWord) -> bool:
    """W^inner ⊆ W^outer"""
    return len(outer) <= len(inner) and outer.is_prefix_of(inner)


class PathSpace:
    """X_A e a ação de S^{A,B} para um par fixo"""

    def __init__(self, pair: MatrixPair, semigroup: Optional[InverseSemigroup] = None):
        self.pair = pair
        self.semigroup = semigroup or InverseSemigroup(pair)
        self.settings = get_settings()
        self._integral_cache: Dict[int, bool] = {}

    # ------------------------------------------------------------------
    # utilidades
    # ------------------------------------------------------------------
    def _reduce(self, vertex: int, t: int) -> int:
        order = self.semigroup.orders[vertex]
        return t % order if order else t

    def _push_letter(self, edge: Edge, carry: int) -> Tuple[Edge, int]:
        i, j, n = edge
        m, carry = split_offset(n + carry * self.pair.B(i, j), self.pair.A(i, j))
        return (i, j, m), carry

    def _starts_with(self, x: EventuallyPeriodicPath, word: PathWord) -> bool:
        return x.base == word.base and x.unfold(len(word)) == word.edges

    def point(self, preperiod: PathWord, period) -> EventuallyPeriodicPath:
        """Constrói um ponto checando que as arestas existem em E_A"""
        self.semigroup.check_path(preperiod)
        x = EventuallyPeriodicPath.build(preperiod, period)
        self.semigroup.check_path(x.period)
        return x

    # ------------------------------------------------------------------
    # ação
    # ------------------------------------------------------------------
    def act_on_prefix(self, s: ISgElement, gamma: PathWord) -> ActionResult:
        if s is ZERO:
            return ZERO
        I, a, J = s.left, s.exponent, s.right
        if len(gamma) < len(J):
            return NeedLongerPrefix() if gamma.is_prefix_of(J) else ZERO
        if not J.is_prefix_of(gamma):
            return ZERO
        tail = PathWord(J.range, gamma.edges[len(J):])
        pushed, residual = self.semigroup.push_unitary(J.range, a, tail)
        return PrefixResult(I.concat(pushed.edges), residual)

    def act_on_periodic(
        self, s: ISgElement, x: EventuallyPeriodicPath, depth: int
    ) -> Union[ZeroElement, PathWord]:
        """Prefixo de comprimento `depth` de s·x, calculado preguiçosamente"""
        if s is ZERO or not self._starts_with(x, s.right):
            return ZERO
        out: List[Edge] = list(s.left.edges)
        carry = s.exponent
        position = len(s.right)
        while len(out) < depth:
            letter, carry = self._push_letter(x.letter(position), carry)
            out.append(letter)
            position += 1
        return PathWord(s.left.base, tuple(out[:depth]))

    def image_point(
        self, s: ISgElement, x: EventuallyPeriodicPath, cap: Optional[int] = None
    ) -> Union[ZeroElement, EventuallyPeriodicPath]:
        """
        s·x como ponto eventualmente periódico

        Acompanha o expoente residual nas fronteiras de período até um
        estado se repetir.

        Raises:
            DomainError: nenhuma repetição dentro do limite
        """
        cap = cap or self.settings.IMAGE_PERIOD_CAP
        if s is ZERO or not self._starts_with(x, s.right):
            return ZERO
        p, q = len(x.preperiod), len(x.period)
        loop_vertex = x.period.base
        out: List[Edge] = list(s.left.edges)
        carry = s.exponent
        position = len(s.right)
        while position < p or (position - p) % q:
            letter, carry = self._push_letter(x.letter(position), carry)
            out.append(letter)
            position += 1

        seen: Dict[int, int] = {}
        for _ in range(cap + 1):
            carry = self._reduce(loop_vertex, carry)
            if carry in seen:
                start = seen[carry]
                pre = PathWord(s.left.base, tuple(out[:start]))
                return EventuallyPeriodicPath.build(pre, out[start:])
            seen[carry] = len(out)
            for _ in range(q):
                letter, carry = self._push_letter(x.letter(position), carry)
                out.append(letter)
                position += 1
        raise DomainError(
            "s·x não é eventualmente periódico dentro do limite",
            cap=cap,
        )

    # ------------------------------------------------------------------
    # pontos fixos
    # ------------------------------------------------------------------
    def generate_fixed_point(self, s: ISgElement, depth: int) -> Optional[PathWord]:
        """
        Prefixo do único ponto fixo de s, ou None se s não tem ponto fixo
        gerado por um ciclo

        Raises:
            DomainError: s idempotente (todo ponto do seu cilindro é fixo)
        """
        if self.semigroup.is_idempotent(s):
            raise DomainError("elemento idempotente: todo ponto do cilindro é fixo")
        I, a, J = s.left, s.exponent, s.right
        if J.is_prefix_of(I):
            stem, cycle, exponent = J, I.edges[len(J):], a
        elif I.is_prefix_of(J):
            stem, cycle, exponent = I, J.edges[len(I):], -a
        else:
            return None
        if not cycle:
            # s_I u^a s_I*: o conjunto fixo é o de u^a, não um único ponto
            return None

        vertex = stem.range
        block = PathWord(vertex, cycle)
        out: List[Edge] = list(stem.edges)
        while len(out) < depth:
            out.extend(block.edges)
            block, exponent = self.semigroup.push_unitary(vertex, exponent, block)
            exponent = self._reduce(vertex, exponent)
        return PathWord(stem.base, tuple(out[:depth]))

    def fixed_point_trace(self, l: int, x: EventuallyPeriodicPath) -> FixedPointTrace:
        """K_0 = l e K_j = K_{j-1}·B/A ao longo de pré-período + um período"""
        kseq = [Fraction(l)]
        for i, j, _ in x.preperiod.edges + x.period.edges:
            kseq.append(kseq[-1] * Fraction(self.pair.B(i, j), self.pair.A(i, j)))
        ratio = Fraction(1)
        for i, j, _ in x.period.edges:
            ratio *= Fraction(self.pair.B(i, j), self.pair.A(i, j))
        return FixedPointTrace(tuple(kseq), ratio)

    def is_fixed_by_unitary(self, i: int, l: int, x: EventuallyPeriodicPath) -> bool:
        if x.base != i:
            raise StructuralError(f"ponto começa em {x.base}, não em {i}")
        if l == 0:
            return True
        trace = self.fixed_point_trace(l, x)
        tail = trace.kseq[1:]
        if 0 in tail:
            # depois de um B=0 todo K_j é zero
            return all(k.denominator == 1 for k in tail[:tail.index(0)])
        return all(k.denominator == 1 for k in tail) and trace.ratio.denominator == 1

    # ------------------------------------------------------------------
    # cilindros fixos por u_i^l
    # ------------------------------------------------------------------
    def _step(self, state: State, target: int) -> State:
        v, k = state
        return target, k * Fraction(self.pair.B(v, target), self.pair.A(v, target))

    def _integral_forever(self, vertex: int) -> bool:
        if vertex not in self._integral_cache:
            self._integral_cache[vertex] = all(
                self.pair.B(i, j) % self.pair.A(i, j) == 0 for i, j in reachable_arcs(self.pair, vertex)
            )
        return self._integral_cache[vertex]

    def _is_safe(self, state: State, cap: int) -> Optional[bool]:
        """Toda continuação mantém K inteiro? None quando o limite estoura"""
        vertex, k = state
        if k == 0 or self._integral_forever(vertex):
            return True
        seen = {state}
        queue = deque([state])
        while queue:
            current = queue.popleft()
            for target in self.pair.omega(current[0]):
                nxt = self._step(current, target)
                if nxt[1].denominator != 1:
                    return False
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > cap:
                        return None
                    queue.append(nxt)
        return True

    def has_fixed_cylinder(self, i: int, l: int, depth_cap: Optional[int] = None) -> CylinderVerdict:
        """
        Existe um cilindro W^γ (γ saindo de i) inteiramente fixo por u_i^l?

        Returns:
            YES com o prefixo γ como testemunha, NO com certificado de
            exaustão, ou UNKNOWN quando o limite de estados é atingido
        """
        if l == 0:
            raise DomainError("has_fixed_cylinder exige l != 0")
        cap = depth_cap or self.settings.FIXED_CYLINDER_STATE_CAP
        start: State = (i, Fraction(l))
        parent: Dict[State, Tuple[Optional[State], Optional[Edge]]] = {start: (None, None)}
        queue = deque([start])
        undecided = False
        while queue:
            state = queue.popleft()
            safe = self._is_safe(state, cap)
            if safe:
                witness = self._witness(i, state, parent)
                logger.debug(f"🔍 cilindro fixo por u_{i}^{l}: {witness.edges}")
                return CylinderVerdict(Tri.YES, witness, len(parent), "all continuations keep K integral")
            if safe is None:
                undecided = True
            for target in self.pair.omega(state[0]):
                nxt = self._step(state, target)
                if nxt[1].denominator == 1 and nxt not in parent:
                    parent[nxt] = (state, (state[0], target, 1))
                    if len(parent) > cap:
                        logger.warning(f"⚠️ limite de {cap} estados atingido para u_{i}^{l}")
                        return CylinderVerdict(Tri.UNKNOWN, None, len(parent), "state cap reached")
                    queue.append(nxt)
        if undecided:
            return CylinderVerdict(Tri.UNKNOWN, None, len(parent), "closure check hit the cap")
        return CylinderVerdict(Tri.NO, None, len(parent), "every reachable state leaves the integers")

    @staticmethod
    def _witness(i: int, state: State, parent) -> PathWord:
        edges: List[Edge] = []
        current = state
        while parent[current][0] is not None:
            previous, edge = parent[current]
            edges.append(edge)
            current = previous
        return PathWord(i, tuple(reversed(edges)))

    # ------------------------------------------------------------------
    # germes
    # ------------------------------------------------------------------
    def defined_at(self, s: ISgElement, x: EventuallyPeriodicPath) -> bool:
        """x ∈ X_{s*s}"""
        return s is not ZERO and self._starts_with(x, s.right)

    def germ(self, s: ISgElement, x: EventuallyPeriodicPath) -> Germ:
        if not self.defined_at(s, x):
            raise DomainError("ponto fora do domínio de s")
        return Germ(s, x)

    def germ_source(self, g: Germ) -> EventuallyPeriodicPath:
        return g.x

    def germ_range(self, g: Germ) -> EventuallyPeriodicPath:
        return self.image_point(g.s, g.x)

    def germ_equal(
        self, s: ISgElement, t: ISgElement, x: EventuallyPeriodicPath, depth_cap: Optional[int] = None
    ) -> GermComparison:
        cap = depth_cap or self.settings.GERM_DEPTH_CAP
        if not (self.defined_at(s, x) and self.defined_at(t, x)):
            raise DomainError("x precisa estar em X_{s*s} ∩ X_{t*t}")
        sg = self.semigroup
        for n in range(cap + 1):
            prefix = x.prefix(n)
            e = Triple(prefix, 0, prefix)
            if sg.multiply(s, e) == sg.multiply(t, e):
                return GermComparison.EQUAL

        if self.act_on_periodic(s, x, cap) != self.act_on_periodic(t, x, cap):
            return GermComparison.NOT_EQUAL
        if len(s.left) - len(s.right) != len(t.left) - len(t.right):
            return GermComparison.NOT_EQUAL

        # pares de expoentes residuais nas fronteiras de período
        p, q = len(x.preperiod), len(x.period)
        n = max(len(s.right), len(t.right), p)
        n += (-(n - p)) % q
        loop_vertex = x.period.base
        seen = set()
        for _ in range(cap):
            rs = self.act_on_prefix(s, x.prefix(n))
            rt = self.act_on_prefix(t, x.prefix(n))
            if rs.prefix != rt.prefix:
                return GermComparison.NOT_EQUAL
            state = (self._reduce(loop_vertex, rs.residual_exponent), self._reduce(loop_vertex, rt.residual_exponent))
            if state[0] == state[1]:
                return GermComparison.EQUAL
            if state in seen:
                return GermComparison.NOT_EQUAL
            seen.add(state)
            n += q
        return GermComparison.UNKNOWN

    def germ_compose(self, g1: Germ, g2: Germ, depth: Optional[int] = None) -> Germ:
        """[s,x]·[t,y] = [st,y] quando x = t·y"""
        x = g1.x
        depth = max(depth or self.settings.GERM_DEPTH_CAP, len(x.preperiod) + 2 * len(x.period))
        image = self.act_on_periodic(g2.s, g2.x, depth)
        if image is ZERO or image != x.prefix(depth):
            raise DomainError("germes não componíveis: d(g1) ≠ r(g2)")
        product = self.semigroup.multiply(g1.s, g2.s)
        if product is ZERO:
            raise DomainError("produto nulo em germes componíveis")
        return Germ(product, g2.x)

    def germ_inverse(self, g: Germ) -> Germ:
        """[s,x]^{-1} = [s*, s·x]"""
        image = self.image_point(g.s, g.x)
        if image is ZERO:
            raise DomainError("x fora do domínio de s")
        return Germ(self.semigroup.star(g.s), image)
