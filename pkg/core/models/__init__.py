"""
Modelos do toolkit Katsura

Estrutura dos modelos:
- matrix.py: par (A,B), grafo E_A, ciclos e relatório de validação
- elements.py: elementos do semigrupoide Λ_{A,B} e palavras cruas
- inverse.py: caminhos reduzidos e elementos do semigrupo inverso S^{A,B}
- paths.py: pontos eventualmente periódicos, germes e resultados de ação
- verdicts.py: veredictos tri-valorados, limites e relatório de análise
- groups.py: grupos abelianos, decomposição de Smith e K-teoria

Todos os valores são imutáveis depois de construídos.
"""

from .matrix import Cycle, Edge, GraphEA, MatrixPair, ValidationReport
from .elements import GAtom, GWord, HAtom, HPower, RawWord, SgpElement, as_raw_word
from .inverse import ZERO, ISgElement, PathWord, Triple, ZeroElement
from .verdicts import AnalysisCaps, AnalysisReport, Reason, Tri, Verdict
from .paths import (
    CylinderVerdict,
    EventuallyPeriodicPath,
    FinitePath,
    FixedPointTrace,
    Germ,
    GermComparison,
    NeedLongerPrefix,
    PrefixResult,
)
from .groups import AbelianGroup, KTheoryResult, RealizationResult, SmithDecomposition

__all__ = [
    "Cycle",
    "Edge",
    "GraphEA",
    "MatrixPair",
    "ValidationReport",
    "GAtom",
    "GWord",
    "HAtom",
    "HPower",
    "RawWord",
    "SgpElement",
    "as_raw_word",
    "ZERO",
    "ISgElement",
    "PathWord",
    "Triple",
    "ZeroElement",
    "AnalysisCaps",
    "AnalysisReport",
    "Reason",
    "Tri",
    "Verdict",
    "CylinderVerdict",
    "EventuallyPeriodicPath",
    "FinitePath",
    "FixedPointTrace",
    "Germ",
    "GermComparison",
    "NeedLongerPrefix",
    "PrefixResult",
    "AbelianGroup",
    "KTheoryResult",
    "RealizationResult",
    "SmithDecomposition",
]
