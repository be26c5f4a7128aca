"""
Configuración de constantes y presupuestos por defecto
Externalizadas para fácil mantenimiento
"""
from typing import Dict

# ==========================================
# VERSION
# ==========================================

TOOL_NAME: str = "finvariants"
TOOL_VERSION: str = "1.0.0"

# ==========================================
# PARAMETROS POR DEFECTO DE LOS COMANDOS
# ==========================================

DEFAULT_E_MAX: int = 2
DEFAULT_S_MAX: int = 1
DEFAULT_WORKERS: int = 1

# ==========================================
# PRESUPUESTOS
# ==========================================

# Numero maximo de S-pares procesados por un calculo de Groebner
DEFAULT_MAX_GB_PAIRS: int = 200_000

# La escalera de potencias a^t se limita a POWER_BUDGET_FACTOR * p^e_max * mu(a)
POWER_BUDGET_FACTOR: int = 10

# Limite de columnas para una matriz densa (algebra lineal mod p)
DEFAULT_DENSE_LIMIT: int = 20_000

# Exponentes en palabra de maquina
MAX_EXPONENT: int = 2**63 - 1

# ==========================================
# VARIABLES DE ENTORNO
# ==========================================

ENV_VARS: Dict[str, str] = {
    "max_gb_pairs": "FINV_MAX_GB_PAIRS",
    "max_power": "FINV_MAX_POWER",
    "workers": "FINV_WORKERS",
    "hilbert_shortcut": "FINV_HILBERT_SHORTCUT",
    "dense_limit": "FINV_DENSE_LIMIT",
}

# ==========================================
# COMANDOS DE LA CLI
# ==========================================

COMMANDS = (
    "fedder",
    "nu",
    "threshold",
    "fpt",
    "splitting",
    "hk",
    "fsig",
    "ainv0",
    "atop",
    "verify",
    "sweep",
    "equality",
    "witness",
    "regbound",
    "multiplicity",
)

# Nombre reservado para el ideal maximal irrelevante
MAXIMAL_IDEAL_NAME: str = "m"
