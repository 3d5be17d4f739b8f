"""
Par de matrizes (A,B), o grafo E_A e ciclos
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from core.exceptions import StructuralError

# Aresta (i, j, n) de E_A, com 1 <= n <= A[i][j]
Edge = Tuple[int, int, int]
Matrix = Tuple[Tuple[int, ...], ...]


def _as_matrix(rows: Sequence[Sequence[int]], name: str, n: int) -> Matrix:
    if not isinstance(rows, (list, tuple)) or len(rows) != n:
        raise StructuralError(f"{name} deve ter {n} linhas", matrix=name)
    frozen = []
    for idx, row in enumerate(rows, start=1):
        if not isinstance(row, (list, tuple)) or len(row) != n:
            raise StructuralError(f"linha {idx} de {name} deve ter {n} entradas", matrix=name)
        for entry in row:
            if isinstance(entry, bool) or not isinstance(entry, int):
                raise StructuralError(f"{name} aceita apenas inteiros exatos", matrix=name)
        frozen.append(tuple(row))
    return tuple(frozen)


@dataclass(frozen=True)
class MatrixPair:
    """O dado global (A,B) de tamanho N; vértices indexados de 1 a N"""
    n: int
    a: Matrix
    b: Matrix

    @classmethod
    def from_lists(cls, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], n: int = None) -> "MatrixPair":
        size = len(a) if n is None else n
        if isinstance(size, bool) or not isinstance(size, int) or size < 1:
            raise StructuralError("N deve ser um inteiro positivo")
        return cls(n=size, a=_as_matrix(a, "A", size), b=_as_matrix(b, "B", size))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def A(self, i: int, j: int) -> int:
        return self.a[i - 1][j - 1]

    def B(self, i: int, j: int) -> int:
        return self.b[i - 1][j - 1]

    def has_vertex(self, i: int) -> bool:
        return 1 <= i <= self.n

    def in_support(self, i: int, j: int) -> bool:
        """(i,j) pertence a Ω_A"""
        return self.has_vertex(i) and self.has_vertex(j) and self.A(i, j) >= 1

    def omega(self, i: int) -> List[int]:
        """Ω_A(i)"""
        return [j for j in self.vertices if self.A(i, j) >= 1]

    def is_edge(self, edge: Edge) -> bool:
        i, j, m = edge
        return self.in_support(i, j) and 1 <= m <= self.A(i, j)

    def edges_from(self, i: int) -> List[Edge]:
        return [(i, j, m) for j in self.omega(i) for m in range(1, self.A(i, j) + 1)]

    def to_dict(self) -> dict:
        return {"N": self.n, "A": [list(r) for r in self.a], "B": [list(r) for r in self.b]}


@dataclass(frozen=True)
class ValidationReport:
    violations: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class GraphEA:
    vertices: Tuple[int, ...]
    edges: Tuple[Edge, ...]


@dataclass(frozen=True)
class Cycle:
    """Ciclo de E_A: sequência não vazia de arestas fechada"""
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if not self.edges:
            raise StructuralError("ciclo vazio")
        for (_, j, _), (k, _, _) in zip(self.edges, self.edges[1:]):
            if j != k:
                raise StructuralError("arestas consecutivas não se encadeiam")
        if self.edges[-1][1] != self.edges[0][0]:
            raise StructuralError("ciclo não é fechado")

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(e[0] for e in self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def canonical(self) -> "Cycle":
        """Rotação lexicograficamente mínima"""
        k = len(self.edges)
        best = min(self.edges[r:] + self.edges[:r] for r in range(k))
        return Cycle(best)
