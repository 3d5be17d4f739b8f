"""
Configurações centralizadas do toolkit
"""

from dotenv import load_dotenv
from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv(".env")


class Settings(BaseSettings):
    """Configurações da aplicação usando Pydantic"""

    # Configurações básicas
    APP_NAME: str = "Katsura Toolkit"
    VERSION: str = "1.0.0"
    ENVIRONMENT: str = "development"

    # Logging (WARNING mantém o stderr limpo para o contrato de erros JSON)
    LOG_LEVEL: str = "WARNING"

    # Limites das decisões tri-valoradas
    GERM_DEPTH_CAP: int = 32
    FIXED_CYLINDER_STATE_CAP: int = 64
    PROBE_L: int = 4
    ACT_DEPTH: int = 16
    IMAGE_PERIOD_CAP: int = 64
    # 0 significa "usar N"
    CYCLE_LENGTH_CAP: int = 0

    @field_validator("LOG_LEVEL", mode='before')
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        """Aceita o nível em qualquer caixa"""
        level = str(v).upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"LOG_LEVEL inválido: {v}")
        return level

    @field_validator(
        "GERM_DEPTH_CAP", "FIXED_CYLINDER_STATE_CAP", "PROBE_L", "ACT_DEPTH", "IMAGE_PERIOD_CAP"
    )
    @classmethod
    def positive_cap(cls, v: int) -> int:
        if v < 1:
            raise ValueError("limites devem ser positivos")
        return v

    @field_validator("CYCLE_LENGTH_CAP")
    @classmethod
    def non_negative_cap(cls, v: int) -> int:
        if v < 0:
            raise ValueError("CYCLE_LENGTH_CAP deve ser >= 0")
        return v

    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True, extra="ignore")


# Instância global das configurações
settings = Settings()


def get_settings() -> Settings:
    """Função para obter as configurações (útil para injeção nos serviços)"""
    return settings
