"""
K-Theory - álgebra linear inteira exata

Forma normal de Smith com matrizes de mudança de base, grupos K_0 e K_1
de O_{A,B} e realização de pares (G_0, G_1) prescritos por matrizes em
blocos auto-certificadas.
"""

import logging
from typing import List, Sequence, Tuple

from sympy import Matrix, diag, eye, zeros

from core.exceptions import InternalError, UnrealizableWithSquareMatrices
from core.models import AbelianGroup, KTheoryResult, MatrixPair, RealizationResult, SmithDecomposition
from core.services import matrix_core

logger = logging.getLogger(__name__)

IntMatrix = List[List[int]]


def _identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _freeze(m: IntMatrix):
    return tuple(tuple(row) for row in m)


def smith_normal_form(m: Sequence[Sequence[int]]) -> SmithDecomposition:
    """
    Decomposição u·m·v = d com d diagonal, não negativa e em cadeia de divisibilidade

    Pivô determinístico: menor valor absoluto não nulo, depois posição
    em ordem de linhas.
    """
    work = [list(row) for row in m]
    rows = len(work)
    cols = len(work[0]) if rows else 0
    u = _identity(rows)
    v = _identity(cols)

    def swap_rows(a: int, b: int) -> None:
        work[a], work[b] = work[b], work[a]
        u[a], u[b] = u[b], u[a]

    def swap_cols(a: int, b: int) -> None:
        for row in work:
            row[a], row[b] = row[b], row[a]
        for row in v:
            row[a], row[b] = row[b], row[a]

    def add_row(target: int, source: int, factor: int) -> None:
        for k in range(cols):
            work[target][k] += factor * work[source][k]
        for k in range(rows):
            u[target][k] += factor * u[source][k]

    def add_col(target: int, source: int, factor: int) -> None:
        for row in work:
            row[target] += factor * row[source]
        for row in v:
            row[target] += factor * row[source]

    for t in range(min(rows, cols)):
        while True:
            candidates = [
                (abs(work[i][j]), i, j)
                for i in range(t, rows)
                for j in range(t, cols)
                if work[i][j]
            ]
            if not candidates:
                break
            _, pi, pj = min(candidates)
            swap_rows(t, pi)
            swap_cols(t, pj)
            pivot = work[t][t]

            cleared = True
            for i in range(t + 1, rows):
                if work[i][t]:
                    add_row(i, t, -(work[i][t] // pivot))
                    cleared = cleared and work[i][t] == 0
            for j in range(t + 1, cols):
                if work[t][j]:
                    add_col(j, t, -(work[t][j] // pivot))
                    cleared = cleared and work[t][j] == 0
            if not cleared:
                continue

            offender = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if work[i][j] % pivot),
                None,
            )
            if offender is None:
                break
            add_row(t, offender, 1)

        if work[t][t] < 0:
            for k in range(cols):
                work[t][k] = -work[t][k]
            for k in range(rows):
                u[t][k] = -u[t][k]

    return SmithDecomposition(u=_freeze(u), v=_freeze(v), d=_freeze(work))


def verify_smith(m: Sequence[Sequence[int]], decomposition: SmithDecomposition) -> bool:
    """Confere u·m·v = d, unimodularidade, diagonal e cadeia de divisibilidade"""
    mm, uu, vv, dd = (
        Matrix([list(row) for row in x])
        for x in (m, decomposition.u, decomposition.v, decomposition.d)
    )
    if uu * mm * vv != dd:
        return False
    if abs(uu.det()) != 1 or abs(vv.det()) != 1:
        return False
    rows, cols = dd.shape
    if any(dd[i, j] for i in range(rows) for j in range(cols) if i != j):
        return False
    entries = list(decomposition.diagonal)
    if any(e < 0 for e in entries):
        return False
    for a, b in zip(entries, entries[1:]):
        if (a == 0 and b != 0) or (a and b % a):
            return False
    return True


def invariant_factors(m: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    return smith_normal_form(m).diagonal


def cokernel(m: Sequence[Sequence[int]]) -> AbelianGroup:
    """Z^linhas / imagem de m"""
    rows = len(m)
    factors = invariant_factors(m) if rows and len(m[0]) else ()
    rank = sum(1 for d in factors if d)
    return AbelianGroup(free_rank=rows - rank, torsion=tuple(d for d in factors if d >= 2))


def kernel_rank(m: Sequence[Sequence[int]]) -> int:
    cols = len(m[0]) if m else 0
    return cols - sum(1 for d in invariant_factors(m) if d)


def group_from_summands(free_rank: int, orders: Sequence[int]) -> AbelianGroup:
    """Normaliza Z^r ⊕ Z/n_1 ⊕ ... (primário ou não) para fatores invariantes"""
    free = free_rank + sum(1 for n in orders if n == 0)
    cyclic = [abs(n) for n in orders if abs(n) >= 2]
    if not cyclic:
        return AbelianGroup(free, ())
    matrix = [[cyclic[i] if i == j else 0 for j in range(len(cyclic))] for i in range(len(cyclic))]
    torsion = tuple(d for d in invariant_factors(matrix) if d >= 2)
    return AbelianGroup(free, torsion)


def direct_sum(g: AbelianGroup, h: AbelianGroup) -> AbelianGroup:
    return group_from_summands(g.free_rank + h.free_rank, list(g.torsion) + list(h.torsion))


def _i_minus(m) -> IntMatrix:
    n = len(m)
    return [[int(i == j) - m[i][j] for j in range(n)] for i in range(n)]


def k_groups(pair: MatrixPair) -> KTheoryResult:
    """K_0 = coker(I−A) ⊕ ker(I−B), K_1 = coker(I−B) ⊕ ker(I−A)"""
    i_minus_a = _i_minus(pair.a)
    i_minus_b = _i_minus(pair.b)
    k0 = direct_sum(cokernel(i_minus_a), AbelianGroup(kernel_rank(i_minus_b)))
    k1 = direct_sum(cokernel(i_minus_b), AbelianGroup(kernel_rank(i_minus_a)))
    return KTheoryResult(k0=k0, k1=k1)


# ----------------------------------------------------------------------
# realização
# ----------------------------------------------------------------------
def _densify(entries: Sequence[int]) -> IntMatrix:
    """Soma a linha 1 às demais e depois a coluna 1 às demais"""
    n = len(entries)
    m = [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(1, n):
        m[i] = [m[i][k] + m[0][k] for k in range(n)]
    for j in range(1, n):
        for i in range(n):
            m[i][j] += m[i][0]
    return m


def _targets(g0: AbelianGroup, g1: AbelianGroup) -> Tuple[List[int], List[int]]:
    t0, t1, free = list(g0.torsion), list(g1.torsion), g0.free_rank
    size = max(len(t0) + free, len(t1), 1)
    if size >= 2 and not t0 and free == size:
        # diagonal nula não se densifica
        size += 1
    d_a = [1] * (size - len(t0) - free) + t0 + [0] * free
    d_b = [1] * (size - len(t1)) + t1
    return d_a, d_b


def block_factorizations(pair: MatrixPair, a2: Sequence[Sequence[int]], c: Sequence[Sequence[int]]) -> bool:
    """
    Confere I−A = [[I,I],[0,I]]·diag(A″−I,−I)·[[0,−I],[I,I]] e
    I−B = diag(C,I)·[[0,−I],[−I,0]] para o par em blocos
    """
    a2m, cm = Matrix(a2), Matrix(c)
    n = a2m.shape[0]
    ident, null = eye(n), zeros(n, n)
    big_a = Matrix([list(row) for row in pair.a])
    big_b = Matrix([list(row) for row in pair.b])
    left = Matrix.vstack(Matrix.hstack(ident, ident), Matrix.hstack(null, ident))
    right = Matrix.vstack(Matrix.hstack(null, -ident), Matrix.hstack(ident, ident))
    swap = Matrix.vstack(Matrix.hstack(null, -ident), Matrix.hstack(-ident, null))
    ok_a = eye(2 * n) - big_a == left * diag(a2m - ident, -ident) * right
    ok_b = eye(2 * n) - big_b == diag(cm, ident) * swap
    return bool(ok_a and ok_b)


def realize(g0: AbelianGroup, g1: AbelianGroup) -> RealizationResult:
    """
    Par (A,B) com Condição (E), A irredutível, A_ii >= 2, B_ii = 1 e
    K_i(O_{A,B}) ≅ G_i, verificado antes de devolver

    Raises:
        UnrealizableWithSquareMatrices: postos livres diferentes
        InternalError: densificação ou certificado falharam
    """
    if g0.free_rank != g1.free_rank:
        raise UnrealizableWithSquareMatrices(
            f"free ranks differ: {g0} vs {g1}",
            k0=str(g0),
            k1=str(g1),
        )
    d_a, d_b = _targets(g0, g1)
    size = len(d_a)
    m_a = [[-x for x in row] for row in _densify(d_a)]
    c = _densify(d_b)
    a2 = [[int(i == j) - m_a[i][j] for j in range(size)] for i in range(size)]
    if any(x < 1 for row in a2 for x in row) or any(x == 0 for row in c for x in row):
        raise InternalError("densificação falhou", {"A''": a2, "C": c})

    a = [[0] * (2 * size) for _ in range(2 * size)]
    b = [[0] * (2 * size) for _ in range(2 * size)]
    for i in range(size):
        for j in range(size):
            a[i][size + j] = a2[i][j]
            b[i][size + j] = c[i][j]
        a[i][i] = 2
        a[size + i][size + i] = 2
        a[size + i][i] = 1
        b[i][i] = 1
        b[size + i][i] = 1
        b[size + i][size + i] = 1

    pair = MatrixPair.from_lists(a, b)
    kgroups = k_groups(pair)
    certificate = {
        "condition0": matrix_core.validate(pair).ok,
        "conditionE": matrix_core.satisfies_condition_E(pair),
        "irreducible": matrix_core.is_irreducible(pair),
        "diagonal": all(pair.A(i, i) >= 2 and pair.B(i, i) == 1 for i in pair.vertices),
        "kgroups": kgroups == KTheoryResult(g0, g1),
        "block_factorizations": block_factorizations(pair, a2, c),
    }
    if not all(certificate.values()):
        raise InternalError(
            "certificado de realização falhou",
            {"certificate": certificate, "pair": pair.to_dict()},
        )
    logger.info(f"✅ realizado K0={g0}, K1={g1} com N={pair.n}")
    return RealizationResult(pair=pair, certificate=certificate, kgroups=kgroups)
