"""
Elementos do semigrupo inverso S^{A,B} em forma normal s_I u^t s_J*
"""

from dataclasses import dataclass
from typing import Tuple, Union

from core.exceptions import StructuralError
from core.models.matrix import Edge


@dataclass(frozen=True)
class PathWord:
    """Caminho finito reduzido; `base` guarda o vértice do caminho vazio"""
    base: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.edges and self.edges[0][0] != self.base:
            raise StructuralError(f"caminho começa em {self.edges[0][0]}, não em {self.base}")
        for (_, j, _), (k, _, _) in zip(self.edges, self.edges[1:]):
            if j != k:
                raise StructuralError("arestas consecutivas não se encadeiam")

    @classmethod
    def empty(cls, vertex: int) -> "PathWord":
        return cls(vertex, ())

    @classmethod
    def of(cls, edges) -> "PathWord":
        edges = tuple(tuple(e) for e in edges)
        if not edges:
            raise StructuralError("use PathWord.empty(v) para o caminho vazio")
        return cls(edges[0][0], edges)

    @property
    def range(self) -> int:
        return self.edges[-1][1] if self.edges else self.base

    def __len__(self) -> int:
        return len(self.edges)

    def is_prefix_of(self, other: "PathWord") -> bool:
        return self.base == other.base and other.edges[:len(self.edges)] == self.edges

    def concat(self, tail: Tuple[Edge, ...]) -> "PathWord":
        if tail and tail[0][0] != self.range:
            raise StructuralError("concatenação com vértice incompatível")
        return PathWord(self.base, self.edges + tuple(tail))

    def prefix(self, length: int) -> "PathWord":
        return PathWord(self.base, self.edges[:length])


class ZeroElement:
    """O zero de S^{A,B}"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"

    def __reduce__(self):
        return (ZeroElement, ())


ZERO = ZeroElement()


@dataclass(frozen=True)
class Triple:
    """s_I u_{r(I)}^t s_J*; I e J terminam no mesmo vértice"""
    left: PathWord
    exponent: int
    right: PathWord

    def __post_init__(self):
        if self.left.range != self.right.range:
            raise StructuralError("I e J devem ter o mesmo vértice final")

    @property
    def vertex(self) -> int:
        return self.left.range


ISgElement = Union[ZeroElement, Triple]
