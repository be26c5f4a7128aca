"""
Orquestador de comandos sobre un anillo R = S/I y sus ideales con nombre

Cada comando produce entradas de resultado con la forma
    {"op", "params", "value" | "interval" | "rows", "certified", "provenance"}
y, para verify y equality, veredictos de relaciones.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from algebra.calculus import bracket_power
from algebra.ideals import Ideal, QuotientContext
from config.engine import EngineConfig
from config.settings import COMMANDS, DEFAULT_E_MAX, DEFAULT_S_MAX, MAXIMAL_IDEAL_NAME
from core.errors import NotFPure, UnknownIdeal
from core.polyring import Polynomial
from core.rationals import format_rational

from .fpt import check_fpt_equals_cm, fpt_estimate
from .multiplicities import (
    a0_socle_degree,
    a_top_complete_intersection,
    colength,
    f_signature_sequence,
    hilbert_kunz_sequence,
    hilbert_samuel_multiplicity,
)
from .purity import (
    b_invariant,
    fedder_is_f_pure,
    splitting_record,
    strong_f_regularity_witness,
)
from .relations import InvariantReport, RelationVerdict, verify_relations
from .thresholds import f_threshold, nu, regularity_bound

logger = logging.getLogger(__name__)


@dataclass
class CommandParams:
    """Parámetros de un comando, ya resueltos desde la CLI y el archivo"""
    a: str = MAXIMAL_IDEAL_NAME
    J: str = MAXIMAL_IDEAL_NAME
    sop: Optional[str] = None
    c: Optional[Polynomial] = None
    method: Optional[str] = None
    e_max: int = DEFAULT_E_MAX
    s_max: int = DEFAULT_S_MAX
    a_top: Optional[int] = None

    def to_dict(self) -> Dict[str, object]:
        out = {"a": self.a, "J": self.J, "emax": self.e_max, "smax": self.s_max}
        if self.sop is not None:
            out["sop"] = self.sop
        if self.c is not None:
            out["c"] = self.c.to_str()
        if self.method is not None:
            out["method"] = self.method
        if self.a_top is not None:
            out["a_top"] = self.a_top
        return out


@dataclass
class CommandOutcome:
    results: List[Dict[str, object]] = field(default_factory=list)
    relations: List[RelationVerdict] = field(default_factory=list)

    @property
    def has_violation(self) -> bool:
        return any(r.verdict == "violated" for r in self.relations)


class InvariantOrchestrator:
    """
    Despacha los comandos de la herramienta

    Mantiene el contexto, el mapa de ideales con nombre y la configuración
    del motor; cada comando es un método run_<comando>.
    """

    def __init__(self, ctx: QuotientContext, ideals: Optional[Dict[str, Ideal]] = None,
                 config: Optional[EngineConfig] = None, debug: bool = False):
        self.ctx = ctx
        self.ideals = dict(ideals or {})
        self.config = config or EngineConfig()
        self.debug = debug
        self._handlers: Dict[str, Callable[[CommandParams], CommandOutcome]] = {
            name: getattr(self, f"run_{name}") for name in COMMANDS
        }

    def resolve(self, name: str) -> Ideal:
        if name == MAXIMAL_IDEAL_NAME:
            return self.ctx.maximal_ideal()
        if name not in self.ideals:
            raise UnknownIdeal(name)
        return self.ideals[name]

    def run(self, command: str, params: Optional[CommandParams] = None) -> CommandOutcome:
        params = params or CommandParams()
        if command not in self._handlers:
            raise ValueError(f"comando desconocido: {command}")
        logger.info("=" * 60)
        logger.info(f"COMANDO: {command.upper()} en {self.ctx}")
        logger.info("=" * 60)
        outcome = self._handlers[command](params)
        logger.info(f"OK {command}: {len(outcome.results)} resultados, "
                    f"{len(outcome.relations)} relaciones")
        return outcome

    def _entry(self, op: str, params: CommandParams, certified, provenance: str, **payload) -> Dict[str, object]:
        entry = {"op": op, "params": params.to_dict(), "certified": certified, "provenance": provenance}
        entry.update(payload)
        return entry

    # ==========================================
    # COMANDOS
    # ==========================================

    def run_fedder(self, params: CommandParams) -> CommandOutcome:
        method = params.method or "auto"
        pure = fedder_is_f_pure(self.ctx, method, self.config)
        entry = self._entry("fedder", params, True, f"fedder:{method}", value={"f_pure": pure})
        return CommandOutcome([entry])

    def run_nu(self, params: CommandParams) -> CommandOutcome:
        a, J = self.resolve(params.a), self.resolve(params.J)
        rows = [nu(a, J, e, self.ctx, self.config).to_dict() for e in range(1, params.e_max + 1)]
        return CommandOutcome([self._entry("nu", params, True, "binary_search", rows=rows)])

    def run_threshold(self, params: CommandParams) -> CommandOutcome:
        a, J = self.resolve(params.a), self.resolve(params.J)
        estimate = f_threshold(a, J, params.e_max, self.ctx, self.config)
        return CommandOutcome([self._threshold_entry("threshold", params, estimate, "nu_records")])

    def run_fpt(self, params: CommandParams) -> CommandOutcome:
        a = self.resolve(params.a)
        estimate = fpt_estimate(a, params.e_max, params.s_max, self.ctx, self.config)
        return CommandOutcome([self._threshold_entry("fpt", params, estimate, "splitting_ideals")])

    def _threshold_entry(self, op, params, estimate, provenance) -> Dict[str, object]:
        data = estimate.to_dict()
        certified = {"lower": estimate.lower_certified, "upper": estimate.upper_certified}
        return self._entry(op, params, certified, provenance, interval=data["interval"],
                           rows=data["records"], estimate=data)

    def run_splitting(self, params: CommandParams) -> CommandOutcome:
        a = self.resolve(params.a)
        self._require_f_pure()
        rows = [splitting_record(a, e, self.ctx, self.config).to_dict()
                for e in range(1, params.e_max + 1)]
        return CommandOutcome([self._entry("splitting", params, True, "fedder_colon", rows=rows)])

    def run_hk(self, params: CommandParams) -> CommandOutcome:
        J = self.resolve(params.J)
        sequence = hilbert_kunz_sequence(J, params.e_max, self.ctx, self.config)
        data = sequence.to_dict()
        return CommandOutcome([self._entry("hk", params, True, "standard_monomials",
                                           rows=data["rows"], value={"d": data["d"]})])

    def run_fsig(self, params: CommandParams) -> CommandOutcome:
        method = params.method or ("gorenstein" if params.sop else "direct")
        sop = self.resolve(params.sop) if params.sop else None
        estimate = f_signature_sequence(params.e_max, self.ctx, method, sop, self.config)
        data = estimate.to_dict()
        value = {k: v for k, v in data.items() if k != "rows"}
        return CommandOutcome([self._entry("fsig", params, True, f"fsig:{method}",
                                           rows=data["rows"], value=value)])

    def run_ainv0(self, params: CommandParams) -> CommandOutcome:
        J = self.resolve(params.J)
        rows = [{"e": e, "a0": a0_socle_degree(bracket_power(J, e), self.ctx)}
                for e in range(0, params.e_max + 1)]
        return CommandOutcome([self._entry("ainv0", params, True, "standard_monomials", rows=rows)])

    def run_atop(self, params: CommandParams) -> CommandOutcome:
        if params.a_top is not None:
            entry = self._entry("atop", params, False, "user-asserted", value=params.a_top)
        else:
            entry = self._entry("atop", params, True, "complete_intersection",
                                value=a_top_complete_intersection(self.ctx))
        return CommandOutcome([entry])

    def run_verify(self, params: CommandParams) -> CommandOutcome:
        J = self.resolve(params.J)
        sop = self.resolve(params.sop) if params.sop else None
        report: InvariantReport = verify_relations(
            self.ctx, params.e_max, J=J, a_top=params.a_top, J_sop=sop,
            s_max=params.s_max, config=self.config)
        entry = self._entry("verify", params, True, "relations", value=report.values)
        return CommandOutcome([entry], list(report.relations))

    def run_sweep(self, params: CommandParams) -> CommandOutcome:
        """Filas por e: nu, nu/q, b, b/q, λ(R/J^[q]), λ/q^d"""
        a, J = self.resolve(params.a), self.resolve(params.J)
        f_pure = fedder_is_f_pure(self.ctx, config=self.config)
        d = self.ctx.dim
        rows = []
        for e in range(1, params.e_max + 1):
            q = self.ctx.p ** e
            record = nu(a, J, e, self.ctx, self.config)
            row = {"e": e, "nu": record.nu, "nu_ratio": format_rational(record.ratio)}
            if f_pure:
                b = b_invariant(a, e, self.ctx, self.config)
                row.update({"b": b, "b_ratio": format_rational(Fraction(b, q))})
            if self.ctx.lift(J).is_m_primary():
                value = colength(bracket_power(J, e), self.ctx)
                row.update({"colength": value, "hk_ratio": format_rational(Fraction(value, q ** d))})
            logger.info(f"sweep e={e}: {row}")
            rows.append(row)
        return CommandOutcome([self._entry("sweep", params, True, "per_level", rows=rows)])

    def run_equality(self, params: CommandParams) -> CommandOutcome:
        a = self.resolve(params.a)
        result = check_fpt_equals_cm(a, params.e_max, self.ctx, self.config, params.s_max)
        relation = RelationVerdict("fpt_equals_cm", result.verdict, {"levels": result.evidence})
        entry = self._entry("equality", params, True, "interval_comparison", value=result.to_dict())
        return CommandOutcome([entry], [relation])

    def run_witness(self, params: CommandParams) -> CommandOutcome:
        if params.c is None:
            raise ValueError("witness necesita un elemento c")
        found = strong_f_regularity_witness(params.c, params.e_max, self.ctx, self.config)
        return CommandOutcome([self._entry("witness", params, found is not None, "termwise",
                                           value=found)])

    def run_regbound(self, params: CommandParams) -> CommandOutcome:
        J = self.resolve(params.J)
        bound = regularity_bound(J, params.e_max, self.ctx, self.config)
        return CommandOutcome([self._entry("regbound", params, True, "threshold_upper",
                                           value=format_rational(bound))])

    def run_multiplicity(self, params: CommandParams) -> CommandOutcome:
        value = {"e": hilbert_samuel_multiplicity(self.ctx), "dim": self.ctx.dim}
        return CommandOutcome([self._entry("multiplicity", params, True, "hilbert_series", value=value)])

    def _require_f_pure(self) -> None:
        if not fedder_is_f_pure(self.ctx, config=self.config):
            raise NotFPure(f"{self.ctx} no es F-puro")
