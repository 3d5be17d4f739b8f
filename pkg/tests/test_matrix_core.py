"""
Testes das condições combinatórias sobre (A,B)
"""

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.exceptions import StructuralError
from core.models import Cycle, MatrixPair
from core.services import matrix_core
from strategies import pairs


def make(a, b=None):
    b = b if b is not None else [[0] * len(a) for _ in a]
    return MatrixPair.from_lists(a, b)


def every_cycle_has_exit(a):
    """Percorre todos os ciclos simples de vértices; sem saída = só vértices com uma aresta"""
    n = len(a)
    for length in range(1, n + 1):
        for cycle in permutations(range(n), length):
            if cycle[0] != min(cycle):
                continue
            closed = all(a[cycle[k]][cycle[(k + 1) % length]] for k in range(length))
            if closed and all(sum(a[v]) == 1 for v in cycle):
                return False
    return True


def strongly_connected(a):
    """Fecho transitivo de Warshall"""
    n = len(a)
    reach = [[bool(a[i][j]) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                reach[i][j] = reach[i][j] or (reach[i][k] and reach[k][j])
    return all(reach[i][j] for i in range(n) for j in range(n) if i != j)


class TestValidate:
    """Testa a Condição (0)"""

    def test_par_valido(self, e1_pair):
        assert matrix_core.validate(e1_pair).ok

    def test_linha_nula(self):
        report = matrix_core.validate(make([[0, 0], [1, 1]]))
        assert "row 1 of A is zero" in report.violations

    def test_b_fora_do_suporte(self):
        report = matrix_core.validate(make([[2, 0], [1, 2]], [[1, 5], [1, 1]]))
        assert report.violations == ("B[1][2]≠0 but A[1][2]=0",)

    def test_entrada_negativa(self):
        report = matrix_core.validate(make([[2, -1], [1, 2]]))
        assert "A[1][2] is negative" in report.violations

    def test_dimensao_incompativel(self):
        with pytest.raises(StructuralError):
            MatrixPair.from_lists([[2, 1]], [[1, 1], [1, 1]], n=2)

    def test_entradas_nao_inteiras(self):
        with pytest.raises(StructuralError):
            MatrixPair.from_lists([[2.5]], [[1]])


class TestConditions:
    """Testa as Condições (E), (L), (K) e a irredutibilidade"""

    def test_condition_e(self, e1_pair):
        assert matrix_core.satisfies_condition_E(e1_pair)
        assert not matrix_core.satisfies_condition_E(make([[2, 1], [1, 2]], [[1, 0], [1, 1]]))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_condition_e_falha_com_b_nulo(self, n):
        assert not matrix_core.satisfies_condition_E(make([[n]]))

    @pytest.mark.parametrize("a,expected", [
        ([[2, 1], [1, 2]], True),
        ([[2, 1], [0, 2]], False),
        ([[3]], True),
    ])
    def test_irredutivel(self, a, expected):
        assert matrix_core.is_irreducible(make(a)) is expected

    @pytest.mark.parametrize("a,expected", [
        ([[0, 1], [1, 0]], False),
        ([[2]], True),
        ([[2, 1], [1, 2]], True),
        ([[1]], False),
        ([[1, 1], [0, 1]], False),
    ])
    def test_condition_l(self, a, expected):
        assert matrix_core.satisfies_condition_L(make(a)) is expected

    @pytest.mark.parametrize("a,expected", [
        ([[2]], True),
        ([[0, 1], [1, 0]], False),
        ([[1]], False),
        ([[2, 1], [1, 2]], True),
        ([[1, 1], [0, 2]], False),
    ])
    def test_condition_k(self, a, expected):
        assert matrix_core.satisfies_condition_K(make(a)) is expected

    @settings(max_examples=60, deadline=None)
    @given(pairs(max_n=3, max_a=2))
    def test_k_implica_l(self, pair):
        if matrix_core.satisfies_condition_K(pair):
            assert matrix_core.satisfies_condition_L(pair)

    @settings(max_examples=300, deadline=None)
    @given(st.one_of(pairs(max_n=4, max_a=1), pairs(max_n=4, max_a=3)))
    def test_irredutivel_com_l_implica_k(self, pair):
        if matrix_core.is_irreducible(pair) and matrix_core.satisfies_condition_L(pair):
            assert matrix_core.satisfies_condition_K(pair)

    @settings(max_examples=300, deadline=None)
    @given(st.one_of(pairs(max_n=5, max_a=1), pairs(max_n=5, max_a=3)))
    def test_condition_l_contra_ciclos_simples(self, pair):
        assert matrix_core.satisfies_condition_L(pair) is every_cycle_has_exit(pair.a)

    @settings(max_examples=300, deadline=None)
    @given(st.one_of(pairs(max_n=6, max_a=1), pairs(max_n=6, max_a=3)))
    def test_irredutivel_contra_fecho_transitivo(self, pair):
        assert matrix_core.is_irreducible(pair) is strongly_connected(pair.a)


class TestCycles:
    """Testa enumeração de ciclos, saídas e transitoriedade"""

    def test_laco_duplo(self):
        cycles = matrix_core.enumerate_simple_cycles(make([[2]]), 1)
        assert [c.edges for c in cycles] == [((1, 1, 1),), ((1, 1, 2),)]

    def test_ciclo_de_dois_vertices(self, flip_pair):
        cycles = matrix_core.enumerate_simple_cycles(flip_pair, 2)
        assert [c.edges for c in cycles] == [((1, 2, 1), (2, 1, 1))]

    def test_lacos_de_e1(self, e1_pair):
        cycles = matrix_core.enumerate_simple_cycles(e1_pair, 1)
        assert [c.edges for c in cycles] == [
            ((1, 1, 1),), ((1, 1, 2),), ((2, 2, 1),), ((2, 2, 2),)
        ]

    def test_limite_invalido(self, e1_pair):
        with pytest.raises(StructuralError):
            matrix_core.enumerate_simple_cycles(e1_pair, 0)

    def test_razao_do_ciclo(self, e1_pair):
        assert matrix_core.cycle_ratio(e1_pair, (1,)) == Fraction(1, 2)
        assert matrix_core.cycle_ratio(e1_pair, (1, 2)) == 1

    def test_saidas(self):
        pair = make([[2]])
        assert matrix_core.exits(pair, Cycle(((1, 1, 1),))) == [(1, 1, 2)]

    def test_transitoriedade(self, flip_pair):
        assert not matrix_core.is_transitory(make([[2]]), Cycle(((1, 1, 1),)))
        assert matrix_core.is_transitory(make([[1, 1], [0, 1]]), Cycle(((1, 1, 1),)))
        assert matrix_core.is_transitory(flip_pair, Cycle(((1, 2, 1), (2, 1, 1))))

    def test_ciclo_fora_do_grafo(self, flip_pair):
        with pytest.raises(StructuralError):
            matrix_core.is_transitory(flip_pair, Cycle(((1, 1, 1),)))

    @pytest.mark.parametrize("a,expected", [
        ([[2, 1], [1, 2]], True),
        ([[2, 1], [0, 2]], False),
        ([[1]], True),
    ])
    def test_caminhos_fecham_em_ciclos(self, a, expected):
        assert matrix_core.every_path_extends_to_cycle(make(a)) is expected


def test_grafo_ea(e1_pair):
    graph = matrix_core.graph_ea(e1_pair)
    assert graph.vertices == (1, 2)
    assert len(graph.edges) == 6
    assert (1, 2, 1) in graph.edges


def test_digrafo_de_suporte(e1_pair):
    graph = matrix_core.support_digraph(e1_pair)
    assert set(graph.edges) == {(1, 1), (1, 2), (2, 1), (2, 2)}
    assert graph.edges[1, 1]["a"] == 2


def test_ciclos_de_vertices(e1_pair, flip_pair):
    assert matrix_core.vertex_cycles(e1_pair, 2) == [(1,), (1, 2), (2,)]
    assert matrix_core.vertex_cycles(flip_pair, 1) == []
