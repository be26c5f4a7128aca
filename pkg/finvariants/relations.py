"""
Verificador de relaciones entre invariantes sobre ejemplos concretos

Cada relación se marca verified / violated / inconclusive y guarda los
racionales que la atestiguan. Las relaciones son teoremas: "verified"
significa que las cotas certificadas son compatibles con ellas.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, factorial
from typing import Dict, List, Optional

from algebra.calculus import bracket_power
from algebra.ideals import Ideal, QuotientContext
from config.engine import EngineConfig
from core.errors import FInvariantError, NotFPure, SearchBudgetExceeded
from core.rationals import format_interval, format_rational

from .fpt import fpt_estimate
from .multiplicities import (
    a0_socle_degree,
    a_top_complete_intersection,
    f_signature_sequence,
    hilbert_samuel_multiplicity,
)
from .purity import fedder_is_f_pure, splitting_data
from .thresholds import f_threshold, nu, regularity_bound

logger = logging.getLogger(__name__)

VERIFIED = "verified"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"


@dataclass
class RelationVerdict:
    name: str
    verdict: str
    evidence: Dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, object]:
        return {"name": self.name, "verdict": self.verdict, "evidence": self.evidence}


@dataclass
class InvariantReport:
    """Valores calculados y veredictos de las relaciones"""
    context: Dict[str, object]
    values: Dict[str, object] = field(default_factory=dict)
    relations: List[RelationVerdict] = field(default_factory=list)

    @property
    def has_violation(self) -> bool:
        return any(r.verdict == VIOLATED for r in self.relations)

    def add(self, name: str, verdict: str, **evidence) -> RelationVerdict:
        relation = RelationVerdict(name, verdict, evidence)
        self.relations.append(relation)
        logger.info(f"Relacion {name}: {verdict}")
        return relation

    def relation(self, name: str) -> Optional[RelationVerdict]:
        return next((r for r in self.relations if r.name == name), None)

    def to_dict(self) -> Dict[str, object]:
        return {
            "context": self.context,
            "values": self.values,
            "relations": [r.to_dict() for r in self.relations],
        }


def diagonal_exponent(ctx: QuotientContext) -> Optional[int]:
    """b si I = (x_1^b + ... + x_n^b) salvo escalar; en otro caso None"""
    gens = ctx.defining_ideal.generators
    if len(gens) != 1:
        return None
    f = gens[0].monic()
    n = ctx.nvars
    if len(f.terms) != n or any(c != 1 for c in f.terms.values()):
        return None
    degrees = set()
    for exps in f.terms:
        support = [i for i, x in enumerate(exps) if x]
        if len(support) != 1:
            return None
        degrees.add(exps[support[0]])
    return degrees.pop() if len(degrees) == 1 else None


def diagonal_criterion(p: int, n: int, b: int) -> bool:
    """min(p, n) > b y ceil((n*k - n)/2) >= p con k = floor(p/b)"""
    if min(p, n) <= b or b < 1:
        return False
    kappa = p // b
    return ceil((n * kappa - n) / 2) >= p


def verify_relations(ctx: QuotientContext, e_max: int, J: Optional[Ideal] = None,
                           a_top: Optional[int] = None, J_sop: Optional[Ideal] = None,
                           s_max: int = 0, config: Optional[EngineConfig] = None) -> InvariantReport:
    """
    Comprueba fpt <= -a_d <= c^m, la fórmula de nu, s_e >= e(R)/d! y las
    relaciones de apoyo (cadena de I_e, crecimiento de nu, identidad a_0).

    Args:
        J: ideal m-primario para la fórmula de nu (por defecto m)
        a_top: a_d(R) dado por el usuario si R no es intersección completa
        J_sop: sistema de parámetros para la F-signatura gorenstein
    """
    config = config or EngineConfig()
    if not fedder_is_f_pure(ctx, config=config):
        raise NotFPure(f"{ctx} no es F-puro")
    m = ctx.maximal_ideal()
    J = J if J is not None else m
    report = InvariantReport(context=ctx.describe())

    if a_top is None:
        a_top = a_top_complete_intersection(ctx)
        report.values["a_top_source"] = "complete_intersection"
    else:
        report.values["a_top_source"] = "user-asserted"
    report.values["a_top"] = a_top
    report.values["multiplicity"] = hilbert_samuel_multiplicity(ctx)
    report.values["dim"] = ctx.dim
    A = -a_top

    fpt = fpt_estimate(m, e_max, s_max, ctx, config)
    cm = f_threshold(m, m, e_max, ctx, config, f_pure=True)
    report.values["fpt"] = fpt.to_dict()
    report.values["cm"] = cm.to_dict()

    _check_chain(report, fpt, cm, A)
    equality = fpt.contains(A) and cm.contains(A)
    pinned = fpt.lower == fpt.upper == cm.lower == cm.upper == A
    _check_nu_formula(report, ctx, J, e_max, a_top, equality, pinned, config)
    _check_signature(report, ctx, e_max, J_sop, equality, config)
    _check_a0_identity(report, ctx, J, e_max, config)
    _check_nu_growth(report, ctx, cm)
    _check_bracket_chain(report, ctx, e_max, config)
    _check_socle_growth(report, ctx, J, e_max, config)
    _check_diagonal(report, ctx, fpt, cm, a_top)

    try:
        bound = regularity_bound(J, e_max, ctx, config)
        report.values["regbound"] = format_rational(bound)
    except FInvariantError as error:
        report.values["regbound"] = None
        logger.warning(f"Cota de regularidad no disponible: {error}")
    return report


def _check_chain(report: InvariantReport, fpt, cm, A: int) -> None:
    evidence = {
        "fpt": format_interval(fpt.lower, fpt.upper),
        "neg_a_d": format_rational(A),
        "cm": format_interval(cm.lower, cm.upper),
    }
    if fpt.lower > A or cm.upper < A or fpt.lower > cm.upper:
        report.add("fpt_le_neg_a_le_cm", VIOLATED, **evidence)
    else:
        report.add("fpt_le_neg_a_le_cm", VERIFIED, **evidence)


def _check_nu_formula(report, ctx, J, e_max, a_top, equality, pinned, config) -> None:
    if not equality:
        report.add("nu_formula", INCONCLUSIVE, reason="los intervalos no fijan -a_d")
        return
    a0 = a0_socle_degree(J, ctx)
    rows = []
    ok = True
    for e in range(1, e_max + 1):
        q = ctx.p ** e
        value = nu(ctx.maximal_ideal(), J, e, ctx, config).nu
        predicted = q * (a0 - a_top) + a_top
        rows.append({"e": e, "nu": value, "predicted": predicted})
        ok = ok and value == predicted
    if ok:
        report.add("nu_formula", VERIFIED, a0=a0, rows=rows)
    else:
        report.add("nu_formula", VIOLATED if pinned else INCONCLUSIVE, a0=a0, rows=rows)


def _check_signature(report, ctx, e_max, J_sop, equality, config) -> None:
    method = "gorenstein" if J_sop is not None else "direct"
    try:
        estimate = f_signature_sequence(e_max, ctx, method, J_sop, config)
    except SearchBudgetExceeded as error:
        report.add("signature_bound", INCONCLUSIVE, reason=str(error))
        return
    report.values["fsig"] = estimate.to_dict()
    target = estimate.lower_bound_target
    evidence = {
        "method": method,
        "target": format_rational(target),
        "s": [format_rational(s) for s in estimate.values()],
        "footnote": estimate.footnote,
    }
    if all(s >= target for s in estimate.values()):
        report.add("signature_bound", VERIFIED, **evidence)
    elif equality:
        report.add("signature_bound", VIOLATED, **evidence)
    else:
        report.add("signature_bound", INCONCLUSIVE, **evidence)


def _check_a0_identity(report, ctx, J, e_max, config) -> None:
    rows = []
    for e in range(1, e_max + 1):
        a0 = a0_socle_degree(bracket_power(J, e), ctx)
        value = nu(ctx.maximal_ideal(), J, e, ctx, config).nu
        rows.append({"e": e, "a0": a0, "nu": value})
    verdict = VERIFIED if all(r["a0"] == r["nu"] for r in rows) else VIOLATED
    report.add("a0_identity", verdict, rows=rows)


def _check_nu_growth(report, ctx, cm) -> None:
    """nu(q1 q2)/(q1 q2) <= nu(q1)/q1 + mu/q1 y, siendo R F-puro, nu(pq) >= p nu(q)"""
    by_e = {r.e: r for r in cm.records}
    rows = []
    ok = True
    for e1, r1 in by_e.items():
        for e2 in range(1, max(by_e) - e1 + 1):
            r2 = by_e[e1 + e2]
            bound = r1.ratio + Fraction(cm.mu, ctx.p ** e1)
            rows.append({"e1": e1, "e2": e2, "ratio": format_rational(r2.ratio),
                         "bound": format_rational(bound)})
            ok = ok and r2.ratio <= bound
    report.add("nu_growth_bound", VERIFIED if ok else VIOLATED, rows=rows)

    monotone = all(by_e[e + 1].nu >= ctx.p * by_e[e].nu for e in by_e if e + 1 in by_e)
    report.add("f_pure_monotonicity", VERIFIED if monotone else VIOLATED,
               nu=[r.nu for r in cm.records])


def _check_bracket_chain(report, ctx, e_max, config) -> None:
    if e_max < 2:
        return
    rows = []
    try:
        for e in range(1, e_max):
            current = splitting_data(ctx, e, config).ideal()
            following = splitting_data(ctx, e + 1, config)
            inside = all(following.contains(g) for g in bracket_power(current, 1).generators)
            rows.append({"e": e, "contained": inside})
    except SearchBudgetExceeded as error:
        report.add("bracket_chain", INCONCLUSIVE, reason=str(error), rows=rows)
        return
    verdict = VERIFIED if all(r["contained"] for r in rows) else VIOLATED
    report.add("bracket_chain", verdict, rows=rows)


def _check_socle_growth(report, ctx, J, e_max, config) -> None:
    """a_0(R/J^[p^s])/p^s + b_m(p^e)/p^(e+s) <= a_0(R/J^[p^(e+s)])/p^(e+s)"""
    a0 = {s: a0_socle_degree(bracket_power(J, s), ctx) for s in range(0, e_max + 1)}
    b = {e: splitting_data(ctx, e, config).b_for_maximal() for e in range(1, e_max + 1)}
    rows = []
    ok = True
    for e in range(1, e_max + 1):
        for s in range(0, e_max - e + 1):
            left = Fraction(a0[s], ctx.p ** s) + Fraction(b[e], ctx.p ** (e + s))
            right = Fraction(a0[e + s], ctx.p ** (e + s))
            rows.append({"e": e, "s": s, "left": format_rational(left), "right": format_rational(right)})
            ok = ok and left <= right
    report.add("socle_frobenius_lower_bound", VERIFIED if ok else VIOLATED, rows=rows)


def _check_diagonal(report, ctx, fpt, cm, a_top) -> None:
    b = diagonal_exponent(ctx)
    if b is None or not diagonal_criterion(ctx.p, ctx.nvars, b):
        return
    n = ctx.nvars
    predicted = n - b
    target = Fraction(b, factorial(n - 1))
    ok = fpt.contains(predicted) and cm.contains(predicted) and a_top == b - n
    signature = report.values.get("fsig")
    evidence = {
        "b": b,
        "predicted_threshold": predicted,
        "predicted_a_top": b - n,
        "signature_target": format_rational(target),
    }
    if signature:
        evidence["s"] = [row["s"] for row in signature["rows"]]
    report.add("diagonal_prediction", VERIFIED if ok else VIOLATED, **evidence)
