"""
Sucesiones nu y umbrales F con intervalos racionales certificados

nu_a^J(p^e) = max{t : a^t ⊄ J^[p^e]}, calculado en R = S/I como
a^t ⊄ J^[p^e] + I. La búsqueda es binaria en [0, U] con
U = p^e * (nu_a^J(1) + mu(a)); nu_a^J(1) se obtiene por barrido lineal.

Cotas del umbral c^J(a):
- superior: min_e (nu/p^e + mu/p^e), siempre certificada
- inferior: max_e nu/p^e, certificada solo si R es F-puro
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, TypeVar

from algebra.calculus import (
    bracket_power,
    minimal_generators,
    power_cache,
    power_contained,
    require_nonzero,
)
from algebra.ideals import Ideal, QuotientContext, radical_membership
from config.engine import EngineConfig
from core.errors import NotHomogeneous, NotInRadical, SearchBudgetExceeded, UnitIdeal
from core.rationals import format_rational

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class NuRecord:
    """nu_a^J(p^e) y su cociente exacto nu/p^e"""
    e: int
    nu: int
    ratio: Fraction

    def to_dict(self) -> Dict[str, object]:
        return {"e": self.e, "nu": self.nu, "ratio": format_rational(self.ratio)}


@dataclass
class ThresholdEstimate:
    """
    Intervalo [lower, upper] para c^J(a) o fpt(a)

    records guarda nu (o b para fpt) por nivel e; candidates lista cada cota
    superior considerada.
    """
    target: str
    records: List[NuRecord]
    mu: int
    lower: Fraction
    lower_certified: bool
    upper: Fraction
    upper_certified: bool = True
    candidates: List[Dict[str, object]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def contains(self, value) -> bool:
        return self.lower <= value <= self.upper

    def interval(self):
        return self.lower, self.upper

    def to_dict(self) -> Dict[str, object]:
        return {
            "target": self.target,
            "records": [r.to_dict() for r in self.records],
            "mu": self.mu,
            "interval": [format_rational(self.lower), format_rational(self.upper)],
            "lower": format_rational(self.lower),
            "upper": format_rational(self.upper),
            "width": format_rational(self.width),
            "lower_certified": self.lower_certified,
            "upper_certified": self.upper_certified,
            "candidates": self.candidates,
            "notes": self.notes,
        }


def map_levels(func: Callable[[int], T], levels: Iterable[int], workers: int = 1) -> List[T]:
    """Ejecuta func por nivel e; con workers > 1 en paralelo, resultado en orden de e"""
    levels = list(levels)
    if workers <= 1 or len(levels) <= 1:
        return [func(e) for e in levels]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, levels))


def validate_pair(a: Ideal, J: Ideal, ctx: QuotientContext, config: EngineConfig) -> Ideal:
    """
    Verifica las hipótesis de nu y devuelve J + I

    Raises:
        EmptyIdeal, NotHomogeneous, UnitIdeal, NotInRadical
    """
    require_nonzero(a, "a")
    if not a.is_homogeneous():
        raise NotHomogeneous(f"{a} no es homogéneo")
    if not J.is_homogeneous():
        raise NotHomogeneous(f"{J} no es homogéneo")
    if a.is_unit():
        raise UnitIdeal(f"{a} no es propio")
    lifted = ctx.lift(J)
    if lifted.is_unit():
        raise UnitIdeal(f"{J} es el ideal unidad en R")
    for g in a.generators:
        if not radical_membership(g, lifted, max_pairs=config.max_gb_pairs):
            raise NotInRadical(f"{g} no está en el radical de J + I")
    return lifted


def nu(a: Ideal, J: Ideal, e: int, ctx: QuotientContext,
       config: Optional[EngineConfig] = None) -> NuRecord:
    """
    nu_a^J(p^e) exacto

    Examples:
        a = J = m en F_5[x,y], e = 1 -> 8
    """
    config = config or EngineConfig()
    if e < 0:
        raise ValueError("e debe ser no negativo")
    lifted = validate_pair(a, J, ctx, config)
    mu, _ = minimal_generators(a, ctx)
    budget = config.power_budget(ctx.p, e, mu)
    cache = power_cache(a, budget)

    def contained(t: int, target: Ideal) -> bool:
        return power_contained(a, t, target, cache, config.hilbert_shortcut, config.max_gb_pairs)

    nu_one = 0
    while not contained(nu_one + 1, lifted):
        nu_one += 1
        if nu_one > budget:
            raise SearchBudgetExceeded("max_power", budget, "barrido de nu(1)")
    if e == 0:
        return NuRecord(0, nu_one, Fraction(nu_one))

    q = ctx.p ** e
    target = ctx.lift(bracket_power(J, e))
    lo, hi = 0, q * (nu_one + mu) + 1
    logger.debug(f"nu: e={e}, ventana [0, {hi - 1}], mu={mu}, nu(1)={nu_one}")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if contained(mid, target):
            hi = mid
        else:
            lo = mid
    return NuRecord(e, lo, Fraction(lo, q))


def verify_nu_record(a: Ideal, J: Ideal, record: NuRecord, ctx: QuotientContext,
                     config: Optional[EngineConfig] = None) -> bool:
    """Re-prueba a^nu ⊄ J^[p^e] y a^(nu+1) ⊆ J^[p^e] (en R)"""
    config = config or EngineConfig()
    target = ctx.lift(bracket_power(J, record.e))
    cache = power_cache(a)
    inside_next = power_contained(a, record.nu + 1, target, cache, config.hilbert_shortcut)
    inside_nu = power_contained(a, record.nu, target, cache, config.hilbert_shortcut)
    return inside_next and not inside_nu


def f_threshold(a: Ideal, J: Ideal, e_max: int, ctx: QuotientContext,
                config: Optional[EngineConfig] = None,
                f_pure: Optional[bool] = None) -> ThresholdEstimate:
    """
    Intervalo certificado para c^J(a) a partir de nu(p^e), e = 1..e_max

    Args:
        f_pure: resultado de Fedder ya conocido (si None se calcula)
    """
    from .purity import fedder_is_f_pure

    config = config or EngineConfig()
    if e_max < 1:
        raise ValueError("e_max debe ser >= 1")
    records = map_levels(lambda e: nu(a, J, e, ctx, config), range(1, e_max + 1), config.workers)
    mu, _ = minimal_generators(a, ctx)

    candidates = []
    for r in records:
        q = ctx.p ** r.e
        candidates.append({"e": r.e, "s": 0, "bound": format_rational(r.ratio + Fraction(mu, q))})
    upper = min(r.ratio + Fraction(mu, ctx.p ** r.e) for r in records)
    lower = max(r.ratio for r in records)
    if f_pure is None:
        f_pure = fedder_is_f_pure(ctx)

    notes = []
    if not f_pure:
        notes.append("cota inferior heuristica: R no es F-puro")
    estimate = ThresholdEstimate(
        target="c^J(a)",
        records=records,
        mu=mu,
        lower=lower,
        lower_certified=f_pure,
        upper=upper,
        candidates=candidates,
        notes=notes,
    )
    logger.info(f"c^J(a) en [{format_rational(lower)}, {format_rational(upper)}] "
                f"(inferior {'certificada' if f_pure else 'heuristica'})")
    return estimate


def regularity_bound(J: Ideal, e_max: int, ctx: QuotientContext,
                      config: Optional[EngineConfig] = None) -> Fraction:
    """
    D * (c^J(J) + 1) usando la cota superior certificada de c^J(J)

    D - 1 es el mayor grado de un generador minimal de J.
    """
    _, top = minimal_generators(J, ctx)
    estimate = f_threshold(J, J, e_max, ctx, config)
    return (top + 1) * (estimate.upper + 1)
