"""
Testes do espaço de caminhos, pontos fixos e germes
"""

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from core.exceptions import DomainError, StructuralError
from core.models import (
    ZERO,
    EventuallyPeriodicPath,
    GermComparison,
    MatrixPair,
    NeedLongerPrefix,
    PathWord,
    PrefixResult,
    Tri,
)
from core.services.path_space import PathSpace, is_subcylinder
from strategies import pairs, points, triples


def path(*edges):
    return PathWord.of(edges)


def loop_point(vertex=1, *period):
    return EventuallyPeriodicPath.build(PathWord.empty(vertex), period or ((vertex, vertex, 1),))


@pytest.fixture
def e1_space(e1_pair):
    return PathSpace(e1_pair)


@pytest.fixture
def halving_space(halving_pair):
    return PathSpace(halving_pair)


class TestPoints:
    """Testa a forma canônica dos pontos eventualmente periódicos"""

    def test_raiz_primitiva(self):
        x = EventuallyPeriodicPath.build(PathWord.empty(1), [(1, 1, 1), (1, 1, 1)])
        assert x.period.edges == ((1, 1, 1),)

    def test_absorcao_do_pre_periodo(self):
        x = EventuallyPeriodicPath.build(path((1, 1, 2), (1, 1, 1)), [(1, 1, 1)])
        assert x.preperiod.edges == ((1, 1, 2),)
        assert x.unfold(4) == ((1, 1, 2), (1, 1, 1), (1, 1, 1), (1, 1, 1))

    def test_periodo_precisa_fechar(self):
        with pytest.raises(StructuralError):
            EventuallyPeriodicPath.build(PathWord.empty(1), [(1, 2, 1)])

    def test_aresta_inexistente(self, e1_space):
        with pytest.raises(ValueError):
            e1_space.point(PathWord.empty(1), [(1, 1, 3)])

    def test_subcilindro(self):
        assert is_subcylinder(path((1, 1, 1), (1, 2, 1)), path((1, 1, 1)))
        assert not is_subcylinder(path((1, 1, 1)), path((1, 1, 1), (1, 2, 1)))
        assert is_subcylinder(path((1, 1, 1)), PathWord.empty(1))


class TestAction:
    """Testa a ação por multiplicação à esquerda"""

    def test_projecao_age_como_identidade(self, e1_space):
        q1 = e1_space.semigroup.q(1)
        assert e1_space.act_on_prefix(q1, path((1, 1, 1))) == PrefixResult(path((1, 1, 1)), 0)

    def test_prefixar(self, e1_space):
        s = e1_space.semigroup.s(2, 1, 1)
        result = e1_space.act_on_prefix(s, path((1, 1, 2)))
        assert result == PrefixResult(path((2, 1, 1), (1, 1, 2)), 0)

    def test_vertice_errado(self, e1_space):
        assert e1_space.act_on_prefix(e1_space.semigroup.q(2), path((1, 1, 1))) is ZERO

    def test_prefixo_curto(self, e1_space):
        sg = e1_space.semigroup
        s = sg.star(sg.path(path((1, 1, 1), (1, 2, 1))))
        assert isinstance(e1_space.act_on_prefix(s, path((1, 1, 1))), NeedLongerPrefix)

    def test_periodico(self, halving_space):
        u = halving_space.semigroup.u(1)
        image = halving_space.act_on_periodic(u, loop_point(), 3)
        assert image.edges == ((1, 1, 2), (1, 1, 1), (1, 1, 1))

    def test_periodico_fora_do_dominio(self, e1_space):
        s = e1_space.semigroup.star(e1_space.semigroup.s(1, 2, 1))
        assert e1_space.act_on_periodic(s, loop_point(), 4) is ZERO

    def test_imagem_como_ponto(self, halving_space):
        u = halving_space.semigroup.u(1)
        image = halving_space.image_point(u, loop_point())
        assert image.preperiod.edges == ((1, 1, 2),)
        assert image.period.edges == ((1, 1, 1),)

    def test_imagem_sem_repeticao(self):
        space = PathSpace(MatrixPair.from_lists([[1]], [[2]]))
        with pytest.raises(DomainError):
            space.image_point(space.semigroup.u(1), loop_point(), cap=8)


class TestFixedPoints:
    """Testa geração e decisão de pontos fixos"""

    def test_ciclo_puro(self, halving_space):
        s = halving_space.semigroup.s(1, 1, 1)
        assert halving_space.generate_fixed_point(s, 4).edges == ((1, 1, 1),) * 4

    def test_ciclo_com_unitario(self, halving_space):
        sg = halving_space.semigroup
        s = sg.multiply(sg.s(1, 1, 1), sg.u(1))
        assert halving_space.generate_fixed_point(s, 4).edges == (
            (1, 1, 1), (1, 1, 2), (1, 1, 2), (1, 1, 2)
        )

    def test_sem_ponto_fixo(self, halving_space):
        sg = halving_space.semigroup
        s = sg.multiply(sg.s(1, 1, 1), sg.star(sg.s(1, 1, 2)))
        assert halving_space.generate_fixed_point(s, 4) is None

    def test_idempotente(self, halving_space):
        with pytest.raises(DomainError):
            halving_space.generate_fixed_point(halving_space.semigroup.q(1), 4)

    @pytest.mark.parametrize("build", [
        lambda sg: sg.multiply(sg.s(1, 1, 1), sg.u(1)),
        lambda sg: sg.multiply(sg.s(1, 2, 1), sg.s(2, 1, 1)),
        lambda sg: sg.multiply(sg.u(1, -1), sg.star(sg.s(1, 1, 2))),
    ])
    def test_prefixo_gerado_e_fixo(self, e1_space, build):
        s = build(e1_space.semigroup)
        omega = e1_space.generate_fixed_point(s, 22)
        result = e1_space.act_on_prefix(s, omega.prefix(20))
        assert isinstance(result, PrefixResult)
        assert result.prefix == omega.prefix(len(result.prefix))

    def test_traco(self, halving_space):
        trace = halving_space.fixed_point_trace(1, loop_point())
        assert trace.kseq == (1, Fraction(1, 2))
        assert trace.ratio == Fraction(1, 2)

    def test_l_zero(self, halving_space):
        assert halving_space.is_fixed_by_unitary(1, 0, loop_point())

    def test_metade_nao_e_inteiro(self, halving_space):
        assert not halving_space.is_fixed_by_unitary(1, 1, loop_point())

    def test_b_multiplo_de_a(self):
        space = PathSpace(MatrixPair.from_lists([[2, 1], [1, 1]], [[4, 2], [2, 2]]))
        x = EventuallyPeriodicPath.build(path((1, 1, 2)), [(1, 2, 1), (2, 2, 1), (2, 1, 1)])
        assert space.is_fixed_by_unitary(1, 1, x)
        assert space.act_on_periodic(space.semigroup.u(1), x, 12) == x.prefix(12)

    def test_vertice_do_ponto(self, halving_space):
        with pytest.raises(StructuralError):
            halving_space.is_fixed_by_unitary(2, 1, loop_point())

    @pytest.mark.parametrize("l", [1, -1, 2, -2, 3, -3, 4, -4])
    def test_conjunto_fixo_vazio_na_metade(self, halving_space, l):
        assert not halving_space.is_fixed_by_unitary(1, l, loop_point())
        assert not halving_space.is_fixed_by_unitary(1, l, loop_point(1, (1, 1, 2)))
        assert halving_space.has_fixed_cylinder(1, l).value == Tri.NO


class TestFixedCylinders:
    """Testa a busca por cilindros fixos de u_i^l"""

    def test_sem_cilindro(self, halving_space):
        assert halving_space.has_fixed_cylinder(1, 1).value == Tri.NO

    def test_b_nulo_zera_k(self):
        space = PathSpace(MatrixPair.from_lists([[2, 1], [1, 2]], [[1, 0], [0, 1]]))
        verdict = space.has_fixed_cylinder(1, 2)
        assert verdict.value == Tri.YES
        assert verdict.witness.edges == ((1, 2, 1),)

    def test_matriz_zero_um(self):
        space = PathSpace(MatrixPair.from_lists([[1, 1], [1, 0]], [[3, -2], [5, 0]]))
        for l in (1, -2, 7):
            assert space.has_fixed_cylinder(1, l).value == Tri.YES

    def test_l_zero(self, halving_space):
        with pytest.raises(DomainError):
            halving_space.has_fixed_cylinder(1, 0)

    def test_limite_de_estados(self):
        # K dobra para sempre em 1 e nunca sai dos inteiros em 2; o laço em 1 perde integralidade
        space = PathSpace(MatrixPair.from_lists([[1, 1], [0, 2]], [[2, 1], [0, 1]]))
        verdict = space.has_fixed_cylinder(1, 1, depth_cap=4)
        assert verdict.value in (Tri.UNKNOWN, Tri.NO)


class TestGerms:
    """Testa igualdade, composição e inversão de germes"""

    def test_igual_a_si_mesmo(self, e1_space):
        s = e1_space.semigroup.s(1, 1, 1)
        assert e1_space.germ_equal(s, s, loop_point()) == GermComparison.EQUAL

    def test_u_igual_q_com_b_nulo(self):
        space = PathSpace(MatrixPair.from_lists([[1]], [[0]]))
        sg = space.semigroup
        assert space.germ_equal(sg.u(1), sg.q(1), loop_point()) == GermComparison.EQUAL

    def test_primeiras_letras_diferentes(self, e1_space):
        sg = e1_space.semigroup
        assert e1_space.germ_equal(sg.s(1, 1, 1), sg.s(1, 1, 2), loop_point()) == GermComparison.NOT_EQUAL

    def test_u_fixa_o_ponto_mas_nao_o_germe(self):
        space = PathSpace(MatrixPair.from_lists([[2]], [[2]]))
        sg = space.semigroup
        x = loop_point()
        # u·x = x mas u e q diferem em toda vizinhança
        assert space.act_on_periodic(sg.u(1), x, 6) == x.prefix(6)
        assert space.germ_equal(sg.u(1), sg.q(1), x) == GermComparison.NOT_EQUAL

    def test_fora_do_dominio(self, e1_space):
        sg = e1_space.semigroup
        with pytest.raises(DomainError):
            e1_space.germ_equal(sg.q(2), sg.q(2), loop_point())

    def test_inverso_e_composicao(self, e1_space):
        sg = e1_space.semigroup
        g = e1_space.germ(sg.multiply(sg.s(2, 1, 1), sg.u(1)), loop_point())
        inverse = e1_space.germ_inverse(g)
        assert inverse.x == e1_space.germ_range(g)
        unit = e1_space.germ_compose(g, inverse)
        assert unit.s == sg.range_projection(g.s)
        assert e1_space.germ_compose(inverse, g).s == sg.source_projection(g.s)

    def test_origem_e_destino(self, e1_space):
        sg = e1_space.semigroup
        g = e1_space.germ(sg.s(2, 1, 1), loop_point())
        assert e1_space.germ_source(g) == loop_point()
        assert e1_space.germ_range(g).preperiod.edges == ((2, 1, 1),)

    def test_unidade(self, e1_space):
        sg = e1_space.semigroup
        g = e1_space.germ(sg.s(2, 1, 1), loop_point())
        unit = e1_space.germ(sg.q(2), e1_space.germ_range(g))
        assert e1_space.germ_compose(unit, g) == g

    def test_aresta_unica_identifica_q_e_p(self):
        # vértice 1 só tem a aresta (1,2,1): q_1 = p_(1,2,1) sem forma normal comum
        space = PathSpace(MatrixPair.from_lists([[0, 1], [1, 2]], [[0, 1], [1, 1]]))
        sg = space.semigroup
        x = loop_point(1, (1, 2, 1), (2, 1, 1))
        assert sg.q(1) != sg.p(1, 2, 1)
        assert space.germ_equal(sg.q(1), sg.p(1, 2, 1), x) == GermComparison.EQUAL
        assert space.act_on_periodic(sg.q(1), x, 6) == space.act_on_periodic(sg.p(1, 2, 1), x, 6)

    def test_nao_componiveis(self, e1_space):
        sg = e1_space.semigroup
        g = e1_space.germ(sg.q(1), loop_point())
        h = e1_space.germ(sg.q(2), loop_point(2, (2, 2, 1)))
        with pytest.raises(DomainError):
            e1_space.germ_compose(g, h)

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_leis_de_grupoide(self, data):
        space = PathSpace(MatrixPair.from_lists([[2, 1], [1, 2]], [[1, 1], [1, 1]]))
        sg = space.semigroup
        period = data.draw(st.sampled_from([
            [(1, 1, 1)], [(1, 1, 2)], [(1, 2, 1), (2, 1, 1)], [(1, 1, 2), (1, 2, 1), (2, 2, 1), (2, 1, 1)],
        ]))
        x = space.point(PathWord.empty(1), period)
        left = data.draw(st.sampled_from([PathWord.empty(1), path((1, 1, 1)), path((2, 1, 1)), path((1, 2, 1), (2, 2, 2), (2, 1, 1))]))
        t = data.draw(st.integers(-3, 3))
        s = sg.triple(left, t, PathWord.empty(1))
        g = space.germ(s, x)
        inverse = space.germ_inverse(g)
        assert space.germ_inverse(inverse).s == g.s
        assert space.germ_compose(g, inverse).s == sg.range_projection(s)
        assert space.germ_compose(inverse, g).s == sg.source_projection(s)
        assert space.germ_equal(space.germ_compose(inverse, g).s, sg.q(1), x) == GermComparison.EQUAL


class TestActionLaws:
    """Leis da ação parcial sobre pares e pontos aleatórios"""

    @settings(max_examples=300, deadline=None)
    @given(st.data())
    def test_acao_compativel_com_o_produto(self, data):
        pair = data.draw(pairs(max_n=3, max_a=3, b_values=(-1, 0, 1)))
        space = PathSpace(pair)
        sg = space.semigroup
        x, y = data.draw(triples(sg)), data.draw(triples(sg))
        assume(y is not ZERO)
        omega = data.draw(points(pair, prefix=y.right))
        try:
            moved = space.image_point(y, omega)
        except DomainError:
            assume(False)
        expected = space.act_on_periodic(x, moved, 12)
        assert space.act_on_periodic(sg.multiply(x, y), omega, 12) == expected

    @settings(max_examples=300, deadline=None)
    @given(st.data())
    def test_fixo_por_unitario_contra_k_direto(self, data):
        pair = data.draw(pairs(max_n=3, max_a=3))
        space = PathSpace(pair)
        omega = data.draw(points(pair))
        l = data.draw(st.integers(-4, 4))
        k, integral = Fraction(l), True
        for i, j, _ in omega.unfold(50):
            k *= Fraction(pair.B(i, j), pair.A(i, j))
            if k.denominator != 1:
                integral = False
                break
        assert space.is_fixed_by_unitary(omega.base, l, omega) is integral
        image = space.act_on_periodic(space.semigroup.u(omega.base, l), omega, 50)
        assert (image == omega.prefix(50)) is integral

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_b_multiplo_de_a_fixa_todo_ponto(self, data):
        a = [list(row) for row in data.draw(pairs(max_n=3, max_a=3)).a]
        c = data.draw(st.integers(-3, 3))
        pair = MatrixPair.from_lists(a, [[c * entry for entry in row] for row in a])
        space = PathSpace(pair)
        omega = data.draw(points(pair))
        assert space.is_fixed_by_unitary(omega.base, c, omega)
        assert space.act_on_periodic(space.semigroup.u(omega.base, c), omega, 30) == omega.prefix(30)

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_ponto_gerado_por_ciclo_e_fixo(self, data):
        pair = data.draw(pairs(max_n=3, max_a=3))
        space = PathSpace(pair)
        sg = space.semigroup
        cycle_point = data.draw(points(pair))
        stem, cycle = cycle_point.preperiod, cycle_point.period
        around = PathWord(stem.base, stem.edges + cycle.edges)
        s = sg.triple(around, data.draw(st.integers(-3, 3)), stem)
        if data.draw(st.booleans()):
            s = sg.star(s)
        omega = space.generate_fixed_point(s, 20)
        assert len(omega) == 20
        result = space.act_on_prefix(s, omega)
        assert isinstance(result, PrefixResult)
        size = min(len(result.prefix), 20)
        assert result.prefix.edges[:size] == omega.edges[:size]
