"""
Configuración del motor de cálculo (presupuestos, workers, atajos)
"""
from dataclasses import dataclass, replace
from pathlib import Path
import os
from typing import Optional

from .settings import (
    DEFAULT_DENSE_LIMIT,
    DEFAULT_MAX_GB_PAIRS,
    DEFAULT_WORKERS,
    ENV_VARS,
    POWER_BUDGET_FACTOR,
)


@dataclass(frozen=True)
class EngineConfig:
    """Presupuestos y opciones de ejecución del motor"""
    max_gb_pairs: int = DEFAULT_MAX_GB_PAIRS
    max_power: Optional[int] = None
    workers: int = DEFAULT_WORKERS
    hilbert_shortcut: bool = True
    dense_limit: int = DEFAULT_DENSE_LIMIT

    @classmethod
    def from_env(cls, env_file: Optional[Path] = None) -> "EngineConfig":
        """
        Carga configuración desde variables de entorno o archivo .env

        Variables esperadas (todas opcionales):
        - FINV_MAX_GB_PAIRS: máximo de S-pares por base de Groebner
        - FINV_MAX_POWER: máximo t de la escalera de potencias a^t
        - FINV_WORKERS: número de workers para filas por e
        - FINV_HILBERT_SHORTCUT: 'false' desactiva el atajo de Hilbert para a = m
        - FINV_DENSE_LIMIT: máximo de columnas en matrices densas
        """
        from dotenv import load_dotenv

        if env_file is None:
            env_file = Path('.env')

        if env_file.exists():
            load_dotenv(env_file, override=True)
        else:
            load_dotenv(override=False)

        max_power = os.getenv(ENV_VARS["max_power"])
        shortcut = os.getenv(ENV_VARS["hilbert_shortcut"], "true").lower() != "false"

        return cls(
            max_gb_pairs=int(os.getenv(ENV_VARS["max_gb_pairs"], DEFAULT_MAX_GB_PAIRS)),
            max_power=int(max_power) if max_power else None,
            workers=int(os.getenv(ENV_VARS["workers"], DEFAULT_WORKERS)),
            hilbert_shortcut=shortcut,
            dense_limit=int(os.getenv(ENV_VARS["dense_limit"], DEFAULT_DENSE_LIMIT)),
        )

    def with_overrides(self, **overrides) -> "EngineConfig":
        """Aplica overrides ignorando valores None"""
        values = {k: v for k, v in overrides.items() if v is not None}
        if not values:
            return self
        return replace(self, **values)

    def power_budget(self, p: int, e_max: int, mu: int) -> int:
        """Máximo t permitido en la escalera de potencias"""
        if self.max_power is not None:
            return self.max_power
        return POWER_BUDGET_FACTOR * (p ** max(e_max, 1)) * max(mu, 1)

    def __repr__(self) -> str:
        return (f"EngineConfig(max_gb_pairs={self.max_gb_pairs}, max_power={self.max_power}, "
                f"workers={self.workers}, hilbert_shortcut={self.hilbert_shortcut})")
