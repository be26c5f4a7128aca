"""Configuración del motor: constantes por defecto y EngineConfig leído del entorno"""
from .engine import EngineConfig
from .settings import (
    COMMANDS,
    DEFAULT_E_MAX,
    DEFAULT_S_MAX,
    MAX_EXPONENT,
    MAXIMAL_IDEAL_NAME,
    TOOL_NAME,
    TOOL_VERSION,
)

__all__ = [
    'EngineConfig',
    'COMMANDS',
    'DEFAULT_E_MAX',
    'DEFAULT_S_MAX',
    'MAX_EXPONENT',
    'MAXIMAL_IDEAL_NAME',
    'TOOL_NAME',
    'TOOL_VERSION',
]
