"""
Matrix Core - condições combinatórias do par (A,B)

Validação da Condição (0), Condições (E), (L), (K), irredutibilidade,
enumeração de ciclos simples e transitoriedade, todas sobre o grafo E_A.
"""

import logging
from fractions import Fraction
from itertools import product
from typing import Iterable, List, Sequence, Tuple

import networkx as nx

from core.exceptions import StructuralError
from core.models import Cycle, Edge, GraphEA, MatrixPair, ValidationReport

logger = logging.getLogger(__name__)


def validate(pair: MatrixPair) -> ValidationReport:
    """
    Verifica a Condição (0)

    Returns:
        Relatório com todas as violações (linhas nulas de A, entradas
        negativas de A e posições com A=0 e B≠0)
    """
    violations: List[str] = []
    for i in pair.vertices:
        for j in pair.vertices:
            if pair.A(i, j) < 0:
                violations.append(f"A[{i}][{j}] is negative")
        if all(pair.A(i, j) <= 0 for j in pair.vertices):
            violations.append(f"row {i} of A is zero")
        for j in pair.vertices:
            if pair.A(i, j) == 0 and pair.B(i, j) != 0:
                violations.append(f"B[{i}][{j}]≠0 but A[{i}][{j}]=0")
    if violations:
        logger.debug(f"⚠️ Condição (0) violada: {violations}")
    return ValidationReport(tuple(violations))


def graph_ea(pair: MatrixPair) -> GraphEA:
    edges = tuple(e for i in pair.vertices for e in pair.edges_from(i))
    return GraphEA(vertices=tuple(pair.vertices), edges=edges)


def support_digraph(pair: MatrixPair) -> nx.DiGraph:
    """Digrafo de Ω_A com os pesos a=A[i][j], b=B[i][j] nos arcos"""
    graph = nx.DiGraph()
    graph.add_nodes_from(pair.vertices)
    for i in pair.vertices:
        for j in pair.omega(i):
            graph.add_edge(i, j, a=pair.A(i, j), b=pair.B(i, j))
    return graph


def satisfies_condition_E(pair: MatrixPair) -> bool:
    return all(
        pair.B(i, j) != 0
        for i in pair.vertices
        for j in pair.omega(i)
    )


def is_irreducible(pair: MatrixPair) -> bool:
    return nx.is_strongly_connected(support_digraph(pair))


def satisfies_condition_L(pair: MatrixPair) -> bool:
    # Um ciclo sem saída vive no subgrafo funcional dos arcos únicos com A=1
    graph = nx.DiGraph()
    for i in pair.vertices:
        targets = pair.omega(i)
        if len(targets) == 1 and pair.A(i, targets[0]) == 1:
            graph.add_edge(i, targets[0])
    return nx.is_directed_acyclic_graph(graph)


def satisfies_condition_K(pair: MatrixPair) -> bool:
    """
    Cada vértice sobre um ciclo é base de dois ciclos distintos

    Uma componente fortemente conexa com ciclo admite um único laço de
    primeiro retorno por vértice exatamente quando é um ciclo simples com
    multiplicidades 1, isto é, quando tem tantas arestas quanto vértices.
    """
    graph = support_digraph(pair)
    for component in nx.strongly_connected_components(graph):
        edge_count = sum(
            pair.A(i, j) for i in component for j in pair.omega(i) if j in component
        )
        if edge_count and edge_count == len(component):
            logger.debug(f"Condição (K) falha na componente {sorted(component)}")
            return False
    return True


def vertex_cycles(pair: MatrixPair, max_len: int) -> List[Tuple[int, ...]]:
    """Ciclos simples de Ω_A (como sequências de vértices) de comprimento <= max_len"""
    graph = support_digraph(pair)
    found = []
    for cycle in nx.simple_cycles(graph, length_bound=max_len):
        k = len(cycle)
        rotation = min(tuple(cycle[r:] + cycle[:r]) for r in range(k))
        found.append(rotation)
    return sorted(set(found))


def enumerate_simple_cycles(pair: MatrixPair, max_len: int) -> List[Cycle]:
    if max_len < 1:
        raise StructuralError("max_len deve ser >= 1")
    cycles = set()
    for vertices in vertex_cycles(pair, max_len):
        arcs = list(zip(vertices, vertices[1:] + vertices[:1]))
        offsets = [range(1, pair.A(i, j) + 1) for i, j in arcs]
        for choice in product(*offsets):
            edges = tuple((i, j, n) for (i, j), n in zip(arcs, choice))
            cycles.add(Cycle(edges).canonical())
    return sorted(cycles, key=lambda c: (len(c), c.edges))


def cycle_ratio(pair: MatrixPair, vertices: Sequence[int]) -> Fraction:
    """Π B/A ao longo de um ciclo de vértices"""
    ratio = Fraction(1)
    closed = list(vertices) + [vertices[0]]
    for i, j in zip(closed, closed[1:]):
        ratio *= Fraction(pair.B(i, j), pair.A(i, j))
    return ratio


def _check_cycle(pair: MatrixPair, c: Cycle) -> None:
    for edge in c.edges:
        if not pair.is_edge(edge):
            raise StructuralError(f"aresta {edge} não pertence a E_A", edge=list(edge))


def exits(pair: MatrixPair, c: Cycle) -> List[Edge]:
    _check_cycle(pair, c)
    on_cycle = set(c.edges)
    return [
        e
        for v in dict.fromkeys(c.vertices)
        for e in pair.edges_from(v)
        if e not in on_cycle
    ]


def is_transitory(pair: MatrixPair, c: Cycle) -> bool:
    graph = support_digraph(pair)
    cycle_vertices = set(c.vertices)
    for _, target, _ in exits(pair, c):
        reachable = nx.descendants(graph, target) | {target}
        if reachable & cycle_vertices:
            return False
    return True


def every_path_extends_to_cycle(pair: MatrixPair) -> bool:
    # Basta que cada arco fique dentro de uma componente fortemente conexa
    graph = support_digraph(pair)
    component_of = {}
    for idx, component in enumerate(nx.strongly_connected_components(graph)):
        for v in component:
            component_of[v] = idx
    return all(component_of[i] == component_of[j] for i, j in graph.edges)


def reachable_arcs(pair: MatrixPair, start: int) -> Iterable[Tuple[int, int]]:
    """Arcos de Ω_A alcançáveis a partir de um vértice"""
    graph = support_digraph(pair)
    seen = nx.descendants(graph, start) | {start}
    return [(i, j) for i, j in graph.edges if i in seen]
