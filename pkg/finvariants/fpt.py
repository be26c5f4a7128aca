"""
Umbral F-puro: intervalos certificados para fpt(a) y comparación con c^m(a)

Para R F-puro:
- b_a(p^e)/p^e es no decreciente: cota inferior max_e b/p^e
- c^{I_e}(a)/p^e es no creciente y c^{I_e}(a) <= (nu_a^{I_e}(p^s) + mu)/p^s,
  con nu_a^{I_e}(1) = b_a(p^e): cota superior min_{e,s}
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from algebra.calculus import bracket_power, minimal_generators
from algebra.ideals import Ideal, QuotientContext
from config.engine import EngineConfig
from core.errors import NotFPure, SearchBudgetExceeded
from core.rationals import format_interval, format_rational, intersect, scale

from .purity import b_invariant, fedder_is_f_pure, splitting_data
from .thresholds import NuRecord, ThresholdEstimate, f_threshold, map_levels, nu

logger = logging.getLogger(__name__)

VERDICTS = ("consistent", "violated", "inconclusive")


def _require_f_pure(ctx: QuotientContext, config: EngineConfig) -> None:
    if not fedder_is_f_pure(ctx, config=config):
        raise NotFPure(f"{ctx} no es F-puro")


def splitting_threshold_interval(a: Ideal, e: int, s_max: int, ctx: QuotientContext,
                                 config: EngineConfig, mu: Optional[int] = None
                                 ) -> Tuple[Fraction, Fraction, List[Dict[str, object]], List[str]]:
    """
    Intervalo certificado para c^{I_e}(a) con s = 0..s_max

    Devuelve (inferior, superior, candidatos, notas). Las filas con s >= 1
    necesitan generadores explícitos de I_e; si el cálculo denso excede el
    presupuesto se omiten con una nota.
    """
    if mu is None:
        mu, _ = minimal_generators(a, ctx)
    b = b_invariant(a, e, ctx, config)
    lower, upper = Fraction(b), Fraction(b + mu)
    candidates = [{"e": e, "s": 0, "nu": b, "bound": format_rational(upper)}]
    notes: List[str] = []
    if s_max >= 1:
        try:
            splitting = splitting_data(ctx, e, config).ideal()
            for s in range(1, s_max + 1):
                record = nu(a, splitting, s, ctx, config)
                qs = ctx.p ** s
                bound = Fraction(record.nu + mu, qs)
                candidates.append({"e": e, "s": s, "nu": record.nu, "bound": format_rational(bound)})
                lower = max(lower, record.ratio)
                upper = min(upper, bound)
        except SearchBudgetExceeded as error:
            notes.append(f"e={e}: filas s>=1 omitidas ({error})")
            logger.warning(f"Filas s>=1 omitidas en e={e}: {error}")
    return lower, upper, candidates, notes


def fpt_estimate(a: Ideal, e_max: int, s_max: int, ctx: QuotientContext,
                 config: Optional[EngineConfig] = None) -> ThresholdEstimate:
    """
    Intervalo certificado para fpt(a)

    Examples:
        (m, 2, 1, F_5[x,y]) -> [48/25, 2]
    """
    config = config or EngineConfig()
    if e_max < 1:
        raise ValueError("e_max debe ser >= 1")
    _require_f_pure(ctx, config)
    mu, _ = minimal_generators(a, ctx)

    def level(e: int):
        q = ctx.p ** e
        _, upper, candidates, notes = splitting_threshold_interval(a, e, s_max, ctx, config, mu)
        b = int(candidates[0]["nu"])
        for c in candidates:
            c["bound"] = format_rational(Fraction(c["bound"]) / q)
        return NuRecord(e, b, Fraction(b, q)), upper / q, candidates, notes

    levels = map_levels(level, range(1, e_max + 1), config.workers)
    records = [r for r, _, _, _ in levels]
    upper = min(u for _, u, _, _ in levels)
    lower = max(r.ratio for r in records)
    candidates = [c for _, _, cs, _ in levels for c in cs]
    notes = [n for _, _, _, ns in levels for n in ns]

    estimate = ThresholdEstimate(
        target="fpt(a)",
        records=records,
        mu=mu,
        lower=lower,
        lower_certified=True,
        upper=upper,
        candidates=candidates,
        notes=notes,
    )
    logger.info(f"fpt(a) en {format_interval(lower, upper)}")
    return estimate


@dataclass
class EqualityVerdict:
    """Resultado de comparar c^{I_e}(a) con p^e * c^m(a)"""
    verdict: str
    evidence: List[Dict[str, object]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, object]:
        return {"verdict": self.verdict, "evidence": self.evidence}


def check_fpt_equals_cm(a: Ideal, e_max: int, ctx: QuotientContext,
                        config: Optional[EngineConfig] = None, s_max: int = 1) -> EqualityVerdict:
    """
    fpt(a) = c^m(a) sii c^{I_e}(a) = c^{m^[p^e]}(a) = p^e * c^m(a) para todo e

    Por nivel: intervalos disjuntos -> violated; I_e = m^[p^e] + I o
    intervalos puntuales iguales -> consistent; en otro caso inconclusive.
    """
    config = config or EngineConfig()
    _require_f_pure(ctx, config)
    m = ctx.maximal_ideal()
    cm = f_threshold(a, m, e_max, ctx, config, f_pure=True)
    mu, _ = minimal_generators(a, ctx)

    evidence = []
    verdicts = []
    for e in range(1, e_max + 1):
        q = ctx.p ** e
        lo, hi, _, notes = splitting_threshold_interval(a, e, s_max, ctx, config, mu)
        target = scale((cm.lower, cm.upper), q)
        row = {
            "e": e,
            "c_splitting": format_interval(lo, hi),
            "q_times_cm": format_interval(*target),
            "notes": notes,
        }
        overlap = intersect((lo, hi), target)
        if overlap is None:
            verdict = "violated"
        elif lo == hi == target[0] == target[1]:
            verdict = "consistent"
        elif _splitting_equals_frobenius_maximal(ctx, e, config):
            verdict = "consistent"
            row["certificate"] = f"I_{e} = m^[{q}] + I"
        else:
            verdict = "inconclusive"
        if overlap is not None:
            row["overlap"] = format_interval(*overlap)
        row["verdict"] = verdict
        evidence.append(row)
        verdicts.append(verdict)

    if "violated" in verdicts:
        overall = "violated"
    elif all(v == "consistent" for v in verdicts):
        overall = "consistent"
    else:
        overall = "inconclusive"
    logger.info(f"fpt = c^m: {overall}")
    return EqualityVerdict(overall, evidence)


def _splitting_equals_frobenius_maximal(ctx: QuotientContext, e: int, config: EngineConfig) -> bool:
    data = splitting_data(ctx, e, config)
    frobenius_m = ctx.lift(bracket_power(ctx.maximal_ideal(), e))
    if not all(data.contains(g) for g in frobenius_m.generators):
        return False
    try:
        splitting = data.ideal()
    except SearchBudgetExceeded:
        return False
    return all(frobenius_m.contains(g, max_pairs=config.max_gb_pairs) for g in splitting.generators)
