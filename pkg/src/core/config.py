# src/core/config.py
"""
Configurações globais do sympdec.
Usa pydantic-settings para validação e .env para variáveis de ambiente;
os padrões da CLI ficam em configs/main.yaml.
"""

import logging
from pathlib import Path
from typing import Any, Optional

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)

ROOT_DIR = Path(__file__).resolve().parent.parent.parent
DEFAULT_RUN_CONFIG = ROOT_DIR / "configs" / "main.yaml"


class ToleranceSettings(BaseSettings):
    """Tolerâncias padrão de todos os predicados de validação."""

    rtol: float = Field(
        default=1e-8,
        gt=0,
        description="Tolerância relativa (escala com a norma da entrada)"
    )
    atol: float = Field(
        default=1e-10,
        gt=0,
        description="Tolerância absoluta"
    )

    model_config = SettingsConfigDict(
        env_prefix="SYMPDEC_TOL_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )


class Settings(BaseSettings):
    """
    Configurações globais validadas via Pydantic.
    Lê variáveis de ambiente (prefixo SYMPDEC_) e o arquivo .env.
    """

    # ========== Identificação ==========
    PROJECT_NAME: str = Field(default="sympdec", description="Nome do projeto")
    VERSION: str = Field(default="0.1.0", description="Versão do sistema")

    # ========== Caminhos ==========
    BASE_DIR: Path = Field(default=ROOT_DIR, description="Diretório raiz do projeto")
    LOGS_DIR: Path = Field(default=ROOT_DIR / "logs", description="Diretório de logs")

    # ========== Validação ==========
    VALIDATE_OUTPUTS: bool = Field(
        default=True,
        description="Modo estrito: valida resíduos dos fatores antes de retornar"
    )
    TOLERANCE: ToleranceSettings = Field(
        default_factory=ToleranceSettings,
        description="Tolerâncias padrão (rtol/atol)"
    )

    # ========== Logging ==========
    LOG_LEVEL: str = Field(
        default="WARNING",
        description="Nível de logging (DEBUG, INFO, WARNING, ERROR, CRITICAL)"
    )
    LOG_TO_FILE: bool = Field(
        default=False,
        description="Também grava log em arquivo dentro de LOGS_DIR"
    )

    model_config = SettingsConfigDict(
        env_prefix="SYMPDEC_",
        env_file=".env",
        case_sensitive=True,
        env_nested_delimiter="__",
        extra="ignore",
    )


def load_run_config(path: Optional[Path] = None) -> dict[str, Any]:
    """
    Carrega os padrões de execução da CLI a partir de um YAML.

    Args:
        path: Caminho do YAML. Se None, usa configs/main.yaml (quando existir).

    Returns:
        Dicionário com as seções 'cli' e 'random' (vazias se o arquivo não existir).
    """
    config_path = Path(path) if path is not None else DEFAULT_RUN_CONFIG
    if not config_path.exists():
        if path is not None:
            raise FileNotFoundError(f"Arquivo de configuração não encontrado: {config_path}")
        logger.debug("Sem configs/main.yaml - usando padrões embutidos")
        return {"cli": {}, "random": {}}

    with open(config_path, "r", encoding="utf-8") as f:
        raw = yaml.safe_load(f) or {}

    if not isinstance(raw, dict):
        raise ValueError(f"Configuração inválida em {config_path}: esperado um mapeamento YAML")

    config = {"cli": raw.get("cli") or {}, "random": raw.get("random") or {}}
    logger.debug(f"Configuração de execução carregada de {config_path}: {config}")
    return config


# ============== Singleton de configuração ==============
settings = Settings()

logger.debug(f"Configurações carregadas: rtol={settings.TOLERANCE.rtol}, atol={settings.TOLERANCE.atol}")
logger.debug(f"   Validação estrita: {settings.VALIDATE_OUTPUTS}")
