"""
Criterio de Fedder, ideales de escisión I_e y b_a(p^e)

Para R = S/I con q = p^e:
    G_e = (I^[q] : I)                 (mapas F^e_*R -> R)
    I_e = (m^[q] : G_e)               (ideal de escisión, en S)
R es F-puro sii G_1 ⊄ m^[p].

Como m^[q] es monomial, h ∈ I_e sii todo término de h*g cae en m^[q] para
todo generador g de G_e. Esto da una prueba de pertenencia sin bases de
Groebner y una fórmula cerrada para b_m(q).
"""
import logging
import threading
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from algebra.calculus import bracket_power, power_cache, require_nonzero
from algebra.dense import box_colon_generators, box_colon_rank
from algebra.ideals import Ideal, QuotientContext, colon_ideal
from config.engine import EngineConfig
from core.errors import EmptyIdeal, NotFPure, NotHomogeneous, UnitIdeal
from core.polyring import Polynomial

logger = logging.getLogger(__name__)

FEDDER_METHODS = ("auto", "general")


def in_frobenius_maximal(f: Polynomial, q: int) -> bool:
    """f ∈ m^[q]: cada término tiene algún exponente >= q"""
    return all(any(x >= q for x in exps) for exps in f.terms)


def frobenius_colon_generators(ctx: QuotientContext, e: int, method: str = "auto",
                               max_pairs: Optional[int] = None) -> List[Polynomial]:
    """
    Generadores de (I^[q] : I), q = p^e

    - I = 0: (1)
    - I = (f): (f^(q-1))
    - intersección completa (f_1..f_c): I^[q] + ((f_1...f_c)^(q-1))
    - en otro caso: cociente de ideales general
    """
    if method not in FEDDER_METHODS:
        raise ValueError(f"metodo desconocido: {method}")
    ring = ctx.ring
    gens = list(ctx.defining_ideal.generators)
    q = ctx.p ** e
    if not gens:
        return [ring.one()]
    if method == "auto":
        if len(gens) == 1:
            return [gens[0] ** (q - 1)]
        if ctx.dim == ctx.nvars - len(gens):
            product = ring.one()
            for f in gens:
                product = product * f
            return [f.frobenius_power(e) for f in gens] + [product ** (q - 1)]
    colon = colon_ideal(bracket_power(ctx.defining_ideal, e), ctx.defining_ideal, max_pairs=max_pairs)
    return list(colon.generators)


def fedder_is_f_pure(ctx: QuotientContext, method: str = "auto",
                     config: Optional[EngineConfig] = None) -> bool:
    """
    Criterio de Fedder: (I^[p] : I) ⊄ m^[p]

    Examples:
        F_5[x,y]            -> True
        F_2[x,y]/(x^2+y^2)  -> False
    """
    if ctx.is_polynomial_ring():
        return True
    max_pairs = config.max_gb_pairs if config else None
    gens = frobenius_colon_generators(ctx, 1, method, max_pairs)
    pure = any(not in_frobenius_maximal(g, ctx.p) for g in gens)
    logger.info(f"Fedder ({method}) en {ctx}: {'F-puro' if pure else 'no F-puro'}")
    return pure


class SplittingIdealData:
    """
    I_e = (m^[q] : G_e) representado por los generadores activos de G_e

    Los generadores de G_e que ya están en m^[q] no imponen condiciones y se
    descartan. Si no queda ninguno, I_e = S y R no es F-puro.
    """

    def __init__(self, ctx: QuotientContext, e: int, config: Optional[EngineConfig] = None):
        if e < 1:
            raise ValueError("e debe ser >= 1")
        self.ctx = ctx
        self.e = e
        self.q = ctx.p ** e
        self.config = config or EngineConfig()
        gens = frobenius_colon_generators(ctx, e, max_pairs=self.config.max_gb_pairs)
        self.active = [g for g in gens if not in_frobenius_maximal(g, self.q)]
        if not self.active:
            raise NotFPure(f"{ctx} no es F-puro: (I^[{self.q}] : I) ⊆ m^[{self.q}]")
        self._ideal: Optional[Ideal] = None
        self._colength: Optional[int] = None
        self._lock = threading.Lock()

    def contains(self, h: Polynomial) -> bool:
        """h ∈ I_e, término a término"""
        if h.is_zero():
            return True
        return all(in_frobenius_maximal(h * g, self.q) for g in self.active)

    def b_for_maximal(self) -> int:
        """b_m(q) = max Σ(q-1-v_i) sobre términos v de G_e dentro de la caja"""
        best = -1
        for g in self.active:
            for exps in g.terms:
                if all(x < self.q for x in exps):
                    best = max(best, sum(self.q - 1 - x for x in exps))
        return best

    def ideal(self) -> Ideal:
        """Generadores explícitos de I_e (álgebra lineal densa sobre la caja)"""
        with self._lock:
            if self._ideal is None:
                ring = self.ctx.ring
                if self.ctx.is_polynomial_ring():
                    self._ideal = bracket_power(self.ctx.maximal_ideal(), self.e)
                else:
                    gens = box_colon_generators(ring, self.q, self.active, self.config.dense_limit)
                    self._ideal = Ideal(ring, gens)
            return self._ideal

    def colength(self) -> int:
        """λ(R/I_e) = λ(S/I_e), pues I ⊆ I_e"""
        with self._lock:
            if self._colength is None:
                if self.ctx.is_polynomial_ring():
                    self._colength = self.q ** self.ctx.nvars
                else:
                    self._colength = box_colon_rank(self.ctx.ring, self.q, self.active,
                                                    self.config.dense_limit)
            return self._colength


_SPLITTING: Dict[Tuple, SplittingIdealData] = {}
_SPLITTING_LOCK = threading.Lock()


def splitting_data(ctx: QuotientContext, e: int, config: Optional[EngineConfig] = None) -> SplittingIdealData:
    """SplittingIdealData compartido por (contexto, e)"""
    key = (ctx.cache_key(), e)
    with _SPLITTING_LOCK:
        data = _SPLITTING.get(key)
    if data is None:
        data = SplittingIdealData(ctx, e, config)
        with _SPLITTING_LOCK:
            data = _SPLITTING.setdefault(key, data)
    return data


def clear_splitting_cache() -> None:
    with _SPLITTING_LOCK:
        _SPLITTING.clear()


def splitting_ideal(ctx: QuotientContext, e: int, config: Optional[EngineConfig] = None) -> Ideal:
    """
    I_e = (m^[p^e] : (I^[p^e] : I)) en el anillo ambiente

    Raises:
        NotFPure: si R no pasa el criterio de Fedder
    """
    if not fedder_is_f_pure(ctx, config=config):
        raise NotFPure(f"{ctx} no es F-puro")
    return splitting_data(ctx, e, config).ideal()


@dataclass
class SplittingIdealRecord:
    e: int
    ideal: Ideal
    b: int
    colength: Optional[int] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            "e": self.e,
            "generators": self.ideal.to_strs(),
            "b": self.b,
            "colength": self.colength,
        }


def b_invariant(a: Ideal, e: int, ctx: QuotientContext,
                config: Optional[EngineConfig] = None) -> int:
    """
    b_a(p^e) = max{t : a^t ⊄ I_e}

    Para a = m se usa la fórmula cerrada. En otro caso búsqueda binaria en
    [0, n(q-1)], pues m^(n(q-1)+1) ⊆ m^[q] ⊆ I_e.
    """
    config = config or EngineConfig()
    require_nonzero(a, "a")
    if not a.is_homogeneous():
        raise NotHomogeneous(f"{a} no es homogéneo")
    if a.is_unit():
        raise UnitIdeal(f"{a} no es propio")
    if not fedder_is_f_pure(ctx, config=config):
        raise NotFPure(f"{ctx} no es F-puro")
    data = splitting_data(ctx, e, config)
    if ctx.lift(a).is_maximal_ideal() or a.is_maximal_ideal():
        return data.b_for_maximal()

    q = data.q
    hi = ctx.nvars * (q - 1) + 1
    cache = power_cache(a, hi)
    lo = 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if all(data.contains(h) for h in cache.generators(mid)):
            hi = mid
        else:
            lo = mid
    logger.debug(f"b_a({q}) = {lo}")
    return lo


def splitting_record(a: Ideal, e: int, ctx: QuotientContext, config: Optional[EngineConfig] = None,
                     with_colength: bool = True) -> SplittingIdealRecord:
    data = splitting_data(ctx, e, config)
    b = b_invariant(a, e, ctx, config)
    colength = data.colength() if with_colength else None
    return SplittingIdealRecord(e, data.ideal(), b, colength)


def strong_f_regularity_witness(c: Polynomial, e_max: int, ctx: QuotientContext,
                                config: Optional[EngineConfig] = None) -> Optional[int]:
    """
    Menor e <= e_max con c ∉ I_e, o None

    None no refuta la regularidad F fuerte: la búsqueda es finita.
    """
    homogeneous, _ = c.is_homogeneous()
    if not homogeneous:
        raise NotHomogeneous(f"{c} no es homogéneo")
    if c.is_zero() or ctx.defining_ideal.contains(c):
        raise EmptyIdeal(f"{c} es cero en R")
    if not fedder_is_f_pure(ctx, config=config):
        raise NotFPure(f"{ctx} no es F-puro")
    for e in range(1, e_max + 1):
        if not splitting_data(ctx, e, config).contains(c):
            logger.info(f"Testigo de regularidad F fuerte: e = {e}")
            return e
    return None
