"""
Testes das configurações
"""

import importlib
import os

import pytest
from pydantic import ValidationError

import core.config
from core.config import Settings


class TestSettings:
    """Variáveis de ambiente e arquivo .env"""

    def test_padroes(self, monkeypatch):
        monkeypatch.delenv("PROBE_L", raising=False)
        monkeypatch.chdir(os.path.dirname(__file__))
        assert Settings().PROBE_L == 4

    def test_variavel_de_ambiente(self, monkeypatch):
        monkeypatch.setenv("GERM_DEPTH_CAP", "9")
        assert Settings().GERM_DEPTH_CAP == 9

    def test_nivel_em_qualquer_caixa(self, monkeypatch):
        monkeypatch.setenv("LOG_LEVEL", "debug")
        assert Settings().LOG_LEVEL == "DEBUG"

    def test_limite_invalido(self, monkeypatch):
        monkeypatch.setenv("PROBE_L", "0")
        with pytest.raises(ValidationError):
            Settings()

    def test_arquivo_env(self, tmp_path, monkeypatch):
        monkeypatch.delenv("IMAGE_PERIOD_CAP", raising=False)
        monkeypatch.chdir(tmp_path)
        (tmp_path / ".env").write_text("IMAGE_PERIOD_CAP=12\n")
        assert Settings().IMAGE_PERIOD_CAP == 12

    def test_env_carregado_antes_da_instancia_global(self, tmp_path, monkeypatch):
        monkeypatch.delenv("ACT_DEPTH", raising=False)
        monkeypatch.chdir(tmp_path)
        (tmp_path / ".env").write_text("ACT_DEPTH=5\n")
        try:
            importlib.reload(core.config)
            assert os.environ["ACT_DEPTH"] == "5"
            assert core.config.get_settings().ACT_DEPTH == 5
        finally:
            os.environ.pop("ACT_DEPTH", None)
            monkeypatch.undo()
            importlib.reload(core.config)
