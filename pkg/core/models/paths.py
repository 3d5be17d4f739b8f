"""
Pontos e prefixos do espaço de caminhos X_A, germes e resultados de ação
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from core.exceptions import StructuralError
from core.models.inverse import ISgElement, PathWord
from core.models.matrix import Edge
from core.models.verdicts import Tri

# Prefixo γ|_n e, ao mesmo tempo, o cilindro W_n^γ
FinitePath = PathWord


def _primitive_root(period: Tuple[Edge, ...]) -> Tuple[Edge, ...]:
    q = len(period)
    for d in range(1, q + 1):
        if q % d == 0 and period[:d] * (q // d) == period:
            return period[:d]
    return period


@dataclass(frozen=True)
class EventuallyPeriodicPath:
    """Ponto pré-período + período^∞ em forma canônica"""
    preperiod: PathWord
    period: PathWord

    @classmethod
    def build(cls, preperiod: PathWord, period_edges) -> "EventuallyPeriodicPath":
        pre = tuple(preperiod.edges)
        per = tuple(tuple(e) for e in period_edges)
        if not per:
            raise StructuralError("período vazio")
        if per[0][0] != preperiod.range or per[-1][1] != per[0][0]:
            raise StructuralError("período deve ser um ciclo no vértice final do pré-período")
        # garante encadeamento interno
        PathWord(per[0][0], per)
        per = _primitive_root(per)
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = (per[-1],) + per[:-1]
        base = pre[0][0] if pre else per[0][0]
        return cls(PathWord(base, pre), PathWord(per[0][0], per))

    @property
    def base(self) -> int:
        return self.preperiod.base

    def unfold(self, length: int) -> Tuple[Edge, ...]:
        pre = self.preperiod.edges
        if length <= len(pre):
            return pre[:length]
        per = self.period.edges
        reps = (length - len(pre)) // len(per) + 1
        return (pre + per * reps)[:length]

    def letter(self, position: int) -> Edge:
        """Letra na posição (base 0)"""
        pre = self.preperiod.edges
        if position < len(pre):
            return pre[position]
        per = self.period.edges
        return per[(position - len(pre)) % len(per)]

    def prefix(self, length: int) -> PathWord:
        return PathWord(self.base, self.unfold(length))


@dataclass(frozen=True)
class NeedLongerPrefix:
    """O prefixo ainda não decide a ação"""


@dataclass(frozen=True)
class PrefixResult:
    prefix: PathWord
    residual_exponent: int


@dataclass(frozen=True)
class FixedPointTrace:
    kseq: Tuple[Fraction, ...]
    ratio: Fraction


@dataclass(frozen=True)
class Germ:
    s: ISgElement
    x: EventuallyPeriodicPath


class GermComparison(str, Enum):
    EQUAL = "equal"
    NOT_EQUAL = "not_equal"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CylinderVerdict:
    value: Tri
    witness: Optional[PathWord] = None
    explored: int = 0
    reason: str = ""
