"""
Constructores de ideales: potencias, potencias de Frobenius, sumas, productos
y el paso al cociente R = S/I.
"""
import logging
import threading
from typing import Dict, List, Optional, Tuple

from core.errors import EmptyIdeal, NotHomogeneous, SearchBudgetExceeded, UnitIdeal
from core.polyring import Polynomial
from .hilbert import hilbert_function_value
from .ideals import Ideal, QuotientContext, initial_numerator

logger = logging.getLogger(__name__)


class PowerCache:
    """
    Escalera de generadores de a^t

    powers[t+1] = productos de powers[t] con powers[1], sin duplicados exactos
    (salvo escalar). Crece de forma monótona: un solo escritor, lectores libres.
    """

    def __init__(self, base: Ideal, max_t: Optional[int] = None):
        self.base = base
        self.max_t = max_t
        ring = base.ring
        self._powers: List[Tuple[Polynomial, ...]] = [(ring.one(),), tuple(g.monic() for g in base.generators)]
        self._lock = threading.Lock()

    def generators(self, t: int) -> Tuple[Polynomial, ...]:
        if t < 0:
            raise ValueError("t debe ser no negativo")
        if self.max_t is not None and t > self.max_t:
            raise SearchBudgetExceeded("max_power", self.max_t, f"se pidió a^{t}")
        with self._lock:
            while len(self._powers) <= t:
                self._powers.append(self._next_rung())
            return self._powers[t]

    def _next_rung(self) -> Tuple[Polynomial, ...]:
        previous = self._powers[-1]
        first = self._powers[1]
        seen = set()
        rung = []
        for f in previous:
            for g in first:
                h = (f * g).monic()
                if h.is_zero() or h in seen:
                    continue
                seen.add(h)
                rung.append(h)
        return tuple(rung)

    def ideal(self, t: int) -> Ideal:
        return Ideal(self.base.ring, self.generators(t))


_POWER_CACHES: Dict[int, PowerCache] = {}
_POWER_LOCK = threading.Lock()


def power_cache(a: Ideal, max_t: Optional[int] = None) -> PowerCache:
    """Escalera compartida para el ideal a (una por objeto Ideal)"""
    with _POWER_LOCK:
        cache = _POWER_CACHES.get(id(a))
        if cache is None or cache.base is not a:
            cache = PowerCache(a, max_t)
            _POWER_CACHES[id(a)] = cache
        elif max_t is not None:
            cache.max_t = max_t if cache.max_t is None else max(cache.max_t, max_t)
        return cache


def clear_power_cache() -> None:
    """Descarta las escaleras de potencias (se llama al terminar cada comando)"""
    with _POWER_LOCK:
        _POWER_CACHES.clear()


def ideal_power(a: Ideal, t: int) -> Ideal:
    """
    a^t con la escalera incremental; a^0 = (1)

    Examples:
        ((x, y), 2) -> (x^2, x*y, y^2)
    """
    return power_cache(a).ideal(t)


def bracket_power(J: Ideal, e: int) -> Ideal:
    """J^[p^e] = (g_1^(p^e), ..., g_k^(p^e))"""
    if e < 0:
        raise ValueError("e debe ser no negativo")
    if e == 0:
        return J
    return Ideal(J.ring, [g.frobenius_power(e) for g in J.generators])


def in_quotient(ideal: Ideal, ctx: QuotientContext) -> Ideal:
    """ideal + I: toda pregunta sobre R = S/I se responde en el anillo ambiente"""
    return ctx.lift(ideal)


def ideal_sum(first: Ideal, second: Ideal) -> Ideal:
    return first + second


def ideal_product(first: Ideal, second: Ideal) -> Ideal:
    return first * second


def minimal_generators(a: Ideal, ctx: Optional[QuotientContext] = None) -> Tuple[int, int]:
    """
    mu(a) y el mayor grado de un generador minimal homogéneo (D - 1)

    Elimina generadores redundantes (g en el ideal de los demás, más I si hay
    contexto), empezando por los de mayor grado. Por Nakayama graduado el
    resultado es un sistema minimal.

    Raises:
        NotHomogeneous: si a no es homogéneo
        UnitIdeal: si a no es propio
    """
    key = ctx.cache_key() if ctx is not None else None
    if key in a.minimal_data:
        return a.minimal_data[key]
    if not a.is_homogeneous():
        raise NotHomogeneous(f"{a} no es homogéneo")
    extra = list(ctx.defining_ideal.generators) if ctx is not None else []
    if any(g.is_constant() for g in a.generators):
        raise UnitIdeal(f"{a} no es propio")

    kept = sorted(a.generators, key=lambda g: g.degree)
    changed = True
    while changed:
        changed = False
        for g in sorted(kept, key=lambda g: g.degree, reverse=True):
            rest = [h for h in kept if h is not g]
            if Ideal(a.ring, rest + extra).contains(g):
                kept = rest
                changed = True
                break
    mu = len(kept)
    top = max((g.degree for g in kept), default=0)
    a.minimal_data[key] = (mu, top)
    return mu, top


def power_contained(a: Ideal, t: int, target: Ideal, cache: Optional[PowerCache] = None,
                    hilbert_shortcut: bool = True, max_pairs: Optional[int] = None) -> bool:
    """
    ¿a^t ⊆ target?

    Para a = m y target homogéneo basta ver si la función de Hilbert de
    S/in(target) se anula en grado t. En otro caso se prueba generador a
    generador contra la base de Groebner de target.
    """
    if t == 0:
        return target.is_unit()
    if target.is_zero():
        return False
    basis = target.groebner(max_pairs=max_pairs)
    if basis.is_unit():
        return True
    if hilbert_shortcut and target.is_homogeneous() and a.is_maximal_ideal():
        numerator = initial_numerator(target)
        return hilbert_function_value(numerator, a.ring.nvars, t) == 0
    cache = cache or power_cache(a)
    return all(basis.contains(h) for h in cache.generators(t))


def require_nonzero(a: Ideal, name: str = "a") -> None:
    if a.is_zero():
        raise EmptyIdeal(f"el ideal {name} es cero")
