"""
Elementos do semigrupoide Λ_{A,B}

Forma padrão: potência pura h_i^t (t >= 1) ou palavra em g com offsets
interiores em [1, A] e offset final livre.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple, Union

from core.exceptions import DomainError, StructuralError
from core.models.matrix import Edge


@dataclass(frozen=True)
class HPower:
    vertex: int
    exponent: int = 1

    def __post_init__(self):
        if self.exponent < 1:
            raise DomainError(f"h({self.vertex})^{self.exponent}: expoente deve ser >= 1")

    @property
    def source(self) -> int:
        return self.vertex

    @property
    def range(self) -> int:
        return self.vertex


@dataclass(frozen=True)
class GWord:
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if not self.edges:
            raise StructuralError("palavra g vazia")
        for (_, j, _), (k, _, _) in zip(self.edges, self.edges[1:]):
            if j != k:
                raise StructuralError("vértices consecutivos não coincidem na palavra g")

    @property
    def source(self) -> int:
        return self.edges[0][0]

    @property
    def range(self) -> int:
        return self.edges[-1][1]

    @property
    def final_offset(self) -> int:
        return self.edges[-1][2]

    def __len__(self) -> int:
        return len(self.edges)


SgpElement = Union[HPower, GWord]


@dataclass(frozen=True)
class HAtom:
    """Átomo h(i)^t de uma palavra crua; t pode ser qualquer inteiro"""
    vertex: int
    exponent: int = 1


@dataclass(frozen=True)
class GAtom:
    """Átomo g(i,j,n) de uma palavra crua; n qualquer inteiro"""
    i: int
    j: int
    n: int


RawAtom = Union[HAtom, GAtom]
RawWord = Tuple[RawAtom, ...]


def raw_atoms(item: Union[RawAtom, SgpElement]) -> Tuple[RawAtom, ...]:
    """Expande um elemento já normalizado de volta em átomos"""
    if isinstance(item, (HAtom, GAtom)):
        return (item,)
    if isinstance(item, HPower):
        return (HAtom(item.vertex, item.exponent),)
    return tuple(GAtom(i, j, n) for i, j, n in item.edges)


def as_raw_word(items: Sequence[Union[RawAtom, SgpElement]]) -> RawWord:
    atoms: list = []
    for item in items:
        atoms.extend(raw_atoms(item))
    return tuple(atoms)
