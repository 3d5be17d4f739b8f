"""
Decisions - veredictos sobre O_{A,B}

Combina as condições combinatórias em veredictos tri-valorados:
minimalidade, liberdade topológica, simplicidade, contração local e
infinitude pura. Onde só existe uma condição suficiente o veredicto fica
UNKNOWN em vez de arriscar um SIM/NÃO sem regra que o sustente.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional

import networkx as nx

from core.exceptions import InternalError, StructuralError
from core.models import AnalysisCaps, AnalysisReport, MatrixPair, Tri, Verdict
from core.services import matrix_core
from core.services.ktheory import k_groups
from core.services.path_space import PathSpace

logger = logging.getLogger(__name__)

FIXED_POINT_NOTE = (
    "fixed points in the simplicity criterion are read as fixed points of "
    "the unitary actions u_i^l"
)
CUNTZ_KRIEGER_NOTE = "B=(0): O_{A,B} ≅ Cuntz–Krieger O_A"


def _combine(*verdicts: Verdict) -> Tri:
    values = [v.value for v in verdicts]
    if Tri.NO in values:
        return Tri.NO
    if Tri.UNKNOWN in values:
        return Tri.UNKNOWN
    return Tri.YES


class KatsuraAnalyzer:
    """
    Analisador de um par (A,B) com limites fixos

    Os sub-veredictos são memorizados por instância; o resultado depende
    apenas do par e dos limites.
    """

    def __init__(self, pair: MatrixPair, caps: Optional[AnalysisCaps] = None):
        self.pair = pair
        self.caps = caps or AnalysisCaps.from_settings()
        self.space = PathSpace(pair)
        self._cache: Dict[str, Verdict] = {}

    def _memo(self, key, compute) -> Verdict:
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    @property
    def max_cycle_length(self) -> int:
        return self.caps.cycle_length_cap or self.pair.n

    # ------------------------------------------------------------------
    # condições básicas
    # ------------------------------------------------------------------
    def condition_e(self) -> Verdict:
        def compute():
            if matrix_core.satisfies_condition_E(self.pair):
                return Verdict.of(Tri.YES, ("condition-E", "B is nonzero on the support of A"))
            return Verdict.of(Tri.NO, ("condition-E-fails", "B vanishes somewhere on the support of A"))
        return self._memo("E", compute)

    def condition_l(self) -> Verdict:
        def compute():
            if matrix_core.satisfies_condition_L(self.pair):
                return Verdict.of(Tri.YES, ("condition-L", "every cycle of E_A has an exit"))
            return Verdict.of(Tri.NO, ("condition-L-fails", "E_A has a cycle without exits"))
        return self._memo("L", compute)

    def condition_k(self) -> Verdict:
        def compute():
            if matrix_core.satisfies_condition_K(self.pair):
                return Verdict.of(Tri.YES, ("condition-K", "every cycle vertex bases two distinct cycles"))
            return Verdict.of(Tri.NO, ("condition-K-fails", "some cycle vertex bases a single cycle"))
        return self._memo("K", compute)

    def minimality(self) -> Verdict:
        def compute():
            if matrix_core.is_irreducible(self.pair):
                return Verdict.of(Tri.YES, ("irreducible", "A is irreducible"))
            return Verdict.of(Tri.NO, ("not-irreducible", "the support digraph of A is not strongly connected"))
        return self._memo("minimal", compute)

    # ------------------------------------------------------------------
    # liberdade topológica
    # ------------------------------------------------------------------
    def probe_exponents(self) -> List[int]:
        """±1..±L mais denominadores sugeridos pelas razões B/A de arcos e ciclos"""
        values = set(range(1, self.caps.probe_l + 1))
        for i in self.pair.vertices:
            for j in self.pair.omega(i):
                values.add(Fraction(self.pair.B(i, j), self.pair.A(i, j)).denominator)
        for cycle in matrix_core.vertex_cycles(self.pair, self.max_cycle_length):
            values.add(matrix_core.cycle_ratio(self.pair, cycle).denominator)
        return sorted({sign * v for v in values for sign in (1, -1)}, key=lambda l: (abs(l), l < 0))

    def _contracting_everywhere(self) -> bool:
        """De todo vértice alcança-se um ciclo simples com |Π B/A| < 1"""
        graph = matrix_core.support_digraph(self.pair)
        contracting = set()
        for cycle in matrix_core.vertex_cycles(self.pair, self.max_cycle_length):
            if abs(matrix_core.cycle_ratio(self.pair, cycle)) < 1:
                contracting.update(cycle)
        return all(
            (nx.descendants(graph, v) | {v}) & contracting
            for v in self.pair.vertices
        )

    def topological_freeness(self) -> Verdict:
        return self._memo("free", self._topological_freeness)

    def _topological_freeness(self) -> Verdict:
        cond_l, cond_e = self.condition_l(), self.condition_e()
        failures = [
            (r.tag, r.text)
            for v in (cond_l, cond_e) if v.value == Tri.NO
            for r in v.reasons
        ]
        if failures:
            return Verdict.of(Tri.NO, *failures)

        undecided = []
        exponents = self.probe_exponents()
        for i in self.pair.vertices:
            for l in exponents:
                logger.debug(f"🔍 sondando cilindro fixo para u_{i}^{l}")
                result = self.space.has_fixed_cylinder(i, l, self.caps.depth_cap)
                if result.value == Tri.YES:
                    return Verdict.of(
                        Tri.NO,
                        ("fixed-cylinder", f"u_{i}^{l} fixes the cylinder of {list(result.witness.edges)}"),
                    )
                if result.value == Tri.UNKNOWN:
                    undecided.append(f"(i={i}, l={l})")

        if self._contracting_everywhere():
            return Verdict.of(
                Tri.YES,
                ("condition-L", "every cycle of E_A has an exit"),
                ("condition-E", "B is nonzero on the support of A"),
                ("contracting-cycles", "a simple cycle with |Π B/A| < 1 is reachable from every vertex"),
            )
        reasons = [("contracting-cycles-missing", "some vertex reaches no simple cycle with |Π B/A| < 1")]
        if undecided:
            reasons.append(("probe-unknown", "undecided probes: " + ", ".join(undecided)))
        return Verdict.of(Tri.UNKNOWN, *reasons)

    def essential_principality(self) -> Verdict:
        def compute():
            free = self.topological_freeness()
            if self.condition_e().value == Tri.YES:
                return Verdict.of(
                    free.value,
                    *[(r.tag, r.text) for r in free.reasons],
                    ("equivalent-under-E", "equals topological freeness under Condition (E)"),
                )
            return Verdict.of(Tri.UNKNOWN, ("requires-condition-E", "characterization requires Condition (E)"))
        return self._memo("principal", compute)

    def hausdorff(self) -> Verdict:
        if self.condition_e().value == Tri.YES:
            return Verdict.of(Tri.YES, ("condition-E", "Condition (E) makes the groupoid Hausdorff"))
        return Verdict.of(Tri.UNKNOWN, ("requires-condition-E", "no Hausdorff criterion without Condition (E)"))

    # ------------------------------------------------------------------
    # simplicidade e infinitude pura
    # ------------------------------------------------------------------
    def simplicity(self) -> Verdict:
        return self._memo("simple", self._simplicity)

    def _simplicity(self) -> Verdict:
        interpretation = ("fixed-point-interpretation", FIXED_POINT_NOTE)
        if self.condition_e().value != Tri.YES:
            return Verdict.of(
                Tri.UNKNOWN,
                ("requires-condition-E", "characterization of simplicity requires Condition (E)"),
                interpretation,
            )
        parts = (self.minimality(), self.condition_l(), self.topological_freeness())
        value = _combine(*parts)
        reasons = [(r.tag, r.text) for part in parts for r in part.reasons]
        return Verdict.of(value, *reasons, interpretation)

    def locally_contracting(self) -> Verdict:
        def compute():
            extends = matrix_core.every_path_extends_to_cycle(self.pair)
            if extends and self.condition_l().value == Tri.YES:
                return Verdict.of(
                    Tri.YES,
                    ("paths-extend-to-cycles", "every finite path enlarges to a cycle"),
                    ("condition-L", "every cycle of E_A has an exit"),
                )
            missing = []
            if not extends:
                missing.append(("paths-extend-to-cycles-fails", "some finite path cannot be closed into a cycle"))
            if self.condition_l().value != Tri.YES:
                missing.append(("condition-L-fails", "sufficient criterion needs Condition (L)"))
            return Verdict.of(Tri.UNKNOWN, *missing)
        return self._memo("contracting", compute)

    def pure_infiniteness(self) -> Verdict:
        def compute():
            simple = self.simplicity()
            if simple.value == Tri.YES and self.minimality().value == Tri.YES:
                return Verdict.of(
                    Tri.YES,
                    ("simple", "O_{A,B} is simple"),
                    ("irreducible", "A is irreducible"),
                )
            if simple.value == Tri.NO:
                return Verdict.of(Tri.NO, ("not-simple", "O_{A,B} is not simple"))
            return Verdict.of(Tri.UNKNOWN, ("simplicity-unknown", "simplicity is undecided"))
        return self._memo("pis", compute)

    def katsura_classic_check(self) -> Verdict:
        def compute():
            pair = self.pair
            failures = []
            if not matrix_core.is_irreducible(pair):
                failures.append(("not-irreducible", "A is not irreducible"))
            for i in pair.vertices:
                if pair.A(i, i) < 2:
                    failures.append(("diagonal-A", f"A[{i}][{i}] < 2"))
                if pair.B(i, i) != 1:
                    failures.append(("diagonal-B", f"B[{i}][{i}] ≠ 1"))
            if failures:
                return Verdict.of(Tri.NO, *failures)
            return Verdict.of(
                Tri.YES, ("classic-conditions", "A irreducible, A_ii >= 2 and B_ii = 1 for all i")
            )
        return self._memo("classic", compute)

    # ------------------------------------------------------------------
    # relatório
    # ------------------------------------------------------------------
    def analyze(self) -> AnalysisReport:
        report = matrix_core.validate(self.pair)
        if not report.ok:
            raise StructuralError("par inválido: " + "; ".join(report.violations), violations=list(report.violations))

        notes = []
        if all(b == 0 for row in self.pair.b for b in row):
            notes.append(CUNTZ_KRIEGER_NOTE)
        notes.append(FIXED_POINT_NOTE)

        result = AnalysisReport(
            condition0=Verdict.of(Tri.YES, ("condition-0", "every row of A is nonzero and B vanishes off its support")),
            conditionE=self.condition_e(),
            irreducible=self.minimality(),
            conditionL=self.condition_l(),
            conditionK=self.condition_k(),
            minimal=self.minimality(),
            topologically_free=self.topological_freeness(),
            essentially_principal=self.essential_principality(),
            hausdorff=self.hausdorff(),
            simple=self.simplicity(),
            locally_contracting=self.locally_contracting(),
            purely_infinite_simple=self.pure_infiniteness(),
            katsura_classic=self.katsura_classic_check(),
            nuclear=Verdict.of(Tri.YES, ("nuclear", "O_{A,B} is nuclear")),
            etale=Verdict.of(Tri.YES, ("etale", "the groupoid of germs is étale")),
            amenable=Verdict.of(Tri.YES, ("amenable", "the groupoid of germs is amenable")),
            kgroups=k_groups(self.pair),
            notes=tuple(notes),
        )
        violations = check_consistency(result)
        if violations:
            raise InternalError("relatório inconsistente", {"violations": violations})
        logger.info(
            f"✅ análise concluída: simple={result.simple.value.value}, "
            f"purely_infinite_simple={result.purely_infinite_simple.value.value}"
        )
        return result


def check_consistency(report: AnalysisReport) -> List[str]:
    """Restrições lógicas entre os campos do relatório"""
    problems = []
    yes, no = Tri.YES, Tri.NO
    if report.simple.value == yes and (report.minimal.value != yes or report.conditionL.value != yes):
        problems.append("simple=yes requires minimal=yes and conditionL=yes")
    if report.purely_infinite_simple.value == yes and report.simple.value != yes:
        problems.append("purely_infinite_simple=yes requires simple=yes")
    if report.topologically_free.value == yes and report.essentially_principal.value != yes:
        problems.append("topologically_free=yes requires essentially_principal=yes")
    if report.conditionE.value == yes and report.topologically_free.value != report.essentially_principal.value:
        problems.append("under Condition (E) topological freeness equals essential principality")
    if (
        report.katsura_classic.value == yes
        and report.conditionE.value == yes
        and report.simple.value == no
    ):
        problems.append("classic conditions with Condition (E) never give simple=no")
    if report.minimal.value != report.irreducible.value:
        problems.append("minimal must equal irreducible")
    for name, verdict in report.verdicts().items():
        if verdict.value != Tri.UNKNOWN and not verdict.reasons:
            problems.append(f"{name} lacks a reason")
    return problems


def minimality(pair: MatrixPair) -> Verdict:
    return KatsuraAnalyzer(pair).minimality()


def topological_freeness(pair: MatrixPair, caps: Optional[AnalysisCaps] = None) -> Verdict:
    return KatsuraAnalyzer(pair, caps).topological_freeness()


def simplicity(pair: MatrixPair, caps: Optional[AnalysisCaps] = None) -> Verdict:
    return KatsuraAnalyzer(pair, caps).simplicity()


def locally_contracting(pair: MatrixPair) -> Verdict:
    return KatsuraAnalyzer(pair).locally_contracting()


def pure_infiniteness(pair: MatrixPair, caps: Optional[AnalysisCaps] = None) -> Verdict:
    return KatsuraAnalyzer(pair, caps).pure_infiniteness()


def katsura_classic_check(pair: MatrixPair) -> Verdict:
    return KatsuraAnalyzer(pair).katsura_classic_check()


def analyze(pair: MatrixPair, caps: Optional[AnalysisCaps] = None) -> AnalysisReport:
    return KatsuraAnalyzer(pair, caps).analyze()
