"""
Colongitudes y multiplicidades

- Sucesiones de Hilbert-Kunz λ(R/J^[q])/q^d
- Estimaciones de la F-signatura (directa con I_e, o atajo Gorenstein)
- Multiplicidad de Hilbert-Samuel e(R) y a-invariantes de dimensión cero
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Optional

from algebra.calculus import bracket_power
from algebra.hilbert import artinian_h_vector
from algebra.ideals import Ideal, QuotientContext, colon_ideal, initial_numerator
from config.engine import EngineConfig
from core.errors import (
    NotCompleteIntersection,
    NotFPure,
    NotSystemOfParameters,
    NotZeroDimensional,
)
from core.rationals import format_rational

from .purity import fedder_is_f_pure, splitting_data
from .thresholds import map_levels

logger = logging.getLogger(__name__)

SIGNATURE_METHODS = ("direct", "gorenstein")

# Con a = (J : m) ⊇ J la diferencia e_HK(J) - e_HK(a) es no negativa; la
# nota viaja en cada reporte de F-signatura.
SIGN_FOOTNOTE = (
    "s(R) = e_HK(J) - e_HK(a) con a = (J : m) ⊇ J; la orientacion opuesta "
    "e_HK(a) - e_HK(J) daria un valor no positivo"
)


def h_vector(J: Ideal, ctx: QuotientContext) -> List[int]:
    """Dimensiones por grado de R/J (J + I m-primario)"""
    lifted = ctx.lift(J)
    if lifted.is_unit():
        return []
    h = artinian_h_vector(initial_numerator(lifted), ctx.nvars)
    if h is None:
        raise NotZeroDimensional(f"{J} no es m-primario en R")
    return h


def colength(J: Ideal, ctx: QuotientContext) -> int:
    """
    λ(R/J) = número de monomios estándar de J + I

    Examples:
        m^[2] en F_2[x,y] -> 4
        (x^2, x*y, y^3) en F_3[x,y] -> 4
    """
    return sum(h_vector(J, ctx))


def a0_socle_degree(J: Ideal, ctx: QuotientContext) -> int:
    """a_0(R/J): mayor grado con pieza no nula de R/J"""
    h = h_vector(J, ctx)
    if not h:
        raise NotZeroDimensional("R/J es el módulo cero")
    return len(h) - 1


@dataclass
class HKSequence:
    J: Ideal
    d: int
    rows: List[Dict[str, object]] = field(default_factory=list)

    def ratios(self) -> List[Fraction]:
        return [row["ratio"] for row in self.rows]

    def to_dict(self) -> Dict[str, object]:
        return {
            "J": self.J.to_strs(),
            "d": self.d,
            "rows": [
                {"e": r["e"], "colength": r["colength"], "ratio": format_rational(r["ratio"])}
                for r in self.rows
            ],
        }


def hilbert_kunz_sequence(J: Ideal, e_max: int, ctx: QuotientContext,
                          config: Optional[EngineConfig] = None) -> HKSequence:
    """Filas (e, λ(R/J^[q]), λ/q^d) para e = 1..e_max; sin afirmar el límite"""
    config = config or EngineConfig()
    if e_max < 1:
        raise ValueError("e_max debe ser >= 1")
    d = ctx.dim
    colength(J, ctx)

    def row(e: int) -> Dict[str, object]:
        q = ctx.p ** e
        value = colength(bracket_power(J, e), ctx)
        logger.info(f"HK e={e}: λ = {value}")
        return {"e": e, "colength": value, "ratio": Fraction(value, q ** d)}

    return HKSequence(J, d, map_levels(row, range(1, e_max + 1), config.workers))


def hilbert_samuel_multiplicity(ctx: QuotientContext) -> int:
    """e(R) desde el numerador de Hilbert"""
    return ctx.hilbert().degree


@dataclass
class FSignatureEstimate:
    method: str
    d: int
    rows: List[Dict[str, object]]
    lower_bound_target: Fraction
    footnote: str = SIGN_FOOTNOTE

    def values(self) -> List[Fraction]:
        return [row["s"] for row in self.rows]

    def to_dict(self) -> Dict[str, object]:
        rows = []
        for r in self.rows:
            out = {k: v for k, v in r.items() if k not in ("s", "floor")}
            out["s"] = format_rational(r["s"])
            if "floor" in r:
                out["floor"] = format_rational(r["floor"])
            rows.append(out)
        return {
            "method": self.method,
            "d": self.d,
            "rows": rows,
            "lower_bound_target": format_rational(self.lower_bound_target),
            "footnote": self.footnote,
        }


def check_system_of_parameters(J_sop: Ideal, ctx: QuotientContext) -> None:
    """
    Raises:
        NotSystemOfParameters: si no son dim R elementos homogéneos con J + I m-primario
    """
    d = ctx.dim
    if len(J_sop.generators) != d:
        raise NotSystemOfParameters(f"se esperaban {d} generadores, hay {len(J_sop.generators)}")
    if not J_sop.is_homogeneous():
        raise NotSystemOfParameters("los generadores no son homogéneos")
    if not ctx.lift(J_sop).is_m_primary():
        raise NotSystemOfParameters(f"{J_sop} no es m-primario en R")


def f_signature_sequence(e_max: int, ctx: QuotientContext, method: str = "direct",
                         J_sop: Optional[Ideal] = None,
                         config: Optional[EngineConfig] = None) -> FSignatureEstimate:
    """
    s_e = λ(R/I_e)/q^d (direct) o (λ(R/J^[q]) - λ(R/a^[q]))/q^d (gorenstein)

    En el método gorenstein cada fila lleva además la cota combinatoria
    λ(R/J) * C(q-1, d)/q^d.

    Raises:
        NotFPure, NotSystemOfParameters
    """
    config = config or EngineConfig()
    if method not in SIGNATURE_METHODS:
        raise ValueError(f"metodo desconocido: {method}")
    if not fedder_is_f_pure(ctx, config=config):
        raise NotFPure(f"{ctx} no es F-puro")
    d = ctx.dim
    target = Fraction(hilbert_samuel_multiplicity(ctx), factorial(d))

    if method == "direct":
        def row(e: int) -> Dict[str, object]:
            q = ctx.p ** e
            value = splitting_data(ctx, e, config).colength()
            logger.info(f"F-signatura directa e={e}: λ(R/I_e) = {value}")
            return {"e": e, "colength": value, "s": Fraction(value, q ** d)}
    else:
        if J_sop is None:
            raise NotSystemOfParameters("el metodo gorenstein necesita un sistema de parametros")
        check_system_of_parameters(J_sop, ctx)
        socle = colon_ideal(ctx.lift(J_sop), ctx.maximal_ideal(), max_pairs=config.max_gb_pairs)
        base = colength(J_sop, ctx)

        def row(e: int) -> Dict[str, object]:
            q = ctx.p ** e
            big = colength(bracket_power(J_sop, e), ctx)
            small = colength(bracket_power(socle, e), ctx)
            logger.info(f"F-signatura gorenstein e={e}: {big} - {small}")
            return {
                "e": e,
                "colength_J": big,
                "colength_a": small,
                "s": Fraction(big - small, q ** d),
                "floor": Fraction(base * comb(q - 1, d), q ** d),
            }

    rows = map_levels(row, range(1, e_max + 1), config.workers)
    return FSignatureEstimate(method, d, rows, target)


def a_top_complete_intersection(ctx: QuotientContext) -> int:
    """
    a_d(R) = Σ deg f_i - n para una intersección completa homogénea

    Raises:
        NotCompleteIntersection: si dim R != n - c
    """
    gens = ctx.defining_ideal.generators
    if ctx.dim != ctx.nvars - len(gens):
        raise NotCompleteIntersection(
            f"dim R = {ctx.dim} pero n - c = {ctx.nvars - len(gens)}")
    return sum(f.degree for f in gens) - ctx.nvars
