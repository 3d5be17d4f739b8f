"""
Grupos abelianos finitamente gerados e resultados de K-teoria
"""

from dataclasses import dataclass, field
from typing import Dict, Tuple

from core.models.matrix import Matrix, MatrixPair


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank ⊕ Z/d_1 ⊕ ... com d_1 | d_2 | ... e d_i >= 2"""
    free_rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion


@dataclass(frozen=True)
class KTheoryResult:
    k0: AbelianGroup
    k1: AbelianGroup

    def to_dict(self) -> Dict[str, str]:
        return {"K0": str(self.k0), "K1": str(self.k1)}


@dataclass(frozen=True)
class SmithDecomposition:
    """u·m·v = d"""
    u: Matrix
    v: Matrix
    d: Matrix

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.d[k][k] for k in range(min(len(self.d), len(self.d[0]) if self.d else 0)))


@dataclass(frozen=True)
class RealizationResult:
    pair: MatrixPair
    certificate: Dict[str, bool] = field(default_factory=dict)
    kgroups: KTheoryResult = None

    def to_dict(self) -> dict:
        payload = self.pair.to_dict()
        payload["certificate"] = dict(self.certificate)
        payload["kgroups"] = self.kgroups.to_dict()
        return payload
