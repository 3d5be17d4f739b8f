"""
Fixtures dos pares recorrentes nos testes
"""

import json

import pytest

from core.models import MatrixPair


@pytest.fixture
def e1_pair():
    """A=[[2,1],[1,2]], B=[[1,1],[1,1]]: condições clássicas, K_0 = K_1 = Z"""
    return MatrixPair.from_lists([[2, 1], [1, 2]], [[1, 1], [1, 1]])


@pytest.fixture
def flip_pair():
    """Ciclo de dois vértices sem saída"""
    return MatrixPair.from_lists([[0, 1], [1, 0]], [[0, 1], [1, 0]])


@pytest.fixture
def halving_pair():
    """A=[[2]], B=[[1]]"""
    return MatrixPair.from_lists([[2]], [[1]])


@pytest.fixture
def reducible_pair():
    return MatrixPair.from_lists([[2, 1], [0, 2]], [[1, 1], [0, 1]])


@pytest.fixture
def pair_file(tmp_path):
    """Grava um par em JSON e devolve o caminho"""
    def write(a, b, name="pair.json"):
        path = tmp_path / name
        path.write_text(json.dumps({"N": len(a), "A": a, "B": b}))
        return str(path)
    return write
