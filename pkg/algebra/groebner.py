"""
Motor de bases de Groebner sobre F_p

Buchberger con:
- criterio de coprimos y criterio de cadena (actualización Gebauer-Möller)
- estrategia normal con grado de azúcar
- truncamiento opcional por grado para entradas homogéneas
- base reducida (mónica, canónica para el par ideal/orden)

Las bases se cachean por (generadores canónicos, orden) en un caché protegido
por lock: dos tareas que llenan la misma clave producen el mismo valor.
"""
import heapq
import logging
import threading
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config.settings import DEFAULT_MAX_GB_PAIRS
from core.errors import RingMismatch, SearchBudgetExceeded
from core.polyring import (
    Exponents,
    MonomialOrder,
    PolyRing,
    Polynomial,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomial_quotient,
)

logger = logging.getLogger(__name__)

Terms = Dict[Exponents, int]


class _Desc:
    """Entrada de heap que ordena monomios de mayor a menor"""
    __slots__ = ("key", "mono")

    def __init__(self, key, mono):
        self.key = key
        self.mono = mono

    def __lt__(self, other: "_Desc") -> bool:
        return self.key > other.key


def _coprime(a: Exponents, b: Exponents) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def reduce_terms(f: Terms, basis: Sequence[Tuple[Exponents, Terms]], key, p: int) -> Terms:
    """
    Forma normal completa de f respecto a una lista (monomio líder, términos mónicos)

    Ningún término del resto es divisible por un monomio líder de la base.
    """
    f = dict(f)
    heap = [_Desc(key(m), m) for m in f]
    heapq.heapify(heap)
    remainder: Terms = {}
    while heap:
        m = heapq.heappop(heap).mono
        c = f.get(m)
        if c is None:
            continue
        for lm, g in basis:
            if monomial_divides(lm, m):
                shift = monomial_quotient(m, lm)
                for ge, gc in g.items():
                    t = monomial_mul(ge, shift)
                    old = f.get(t)
                    v = ((old or 0) - c * gc) % p
                    if v:
                        f[t] = v
                        if old is None:
                            heapq.heappush(heap, _Desc(key(t), t))
                    elif old is not None:
                        del f[t]
                break
        else:
            remainder[m] = c
            del f[m]
    return remainder


def _monic_terms(f: Terms, lead: Exponents, p: int) -> Terms:
    inv = pow(f[lead], -1, p)
    return {m: c * inv % p for m, c in f.items()}


class _Pair:
    __slots__ = ("i", "j", "lcm", "sugar")

    def __init__(self, i: int, j: int, lcm: Exponents, sugar: int):
        self.i = i
        self.j = j
        self.lcm = lcm
        self.sugar = sugar


class GroebnerBasis:
    """Base de Groebner reducida de un ideal respecto a un orden"""

    def __init__(self, ring: PolyRing, order: MonomialOrder, polys: Sequence[Polynomial],
                 degree_bound: Optional[int] = None, pairs_processed: int = 0):
        self.ring = ring
        self.order = order
        self.degree_bound = degree_bound
        self.pairs_processed = pairs_processed
        self._polys = tuple(polys)
        self._basis = [(f.leading_monomial(order), dict(f.terms)) for f in self._polys]

    @property
    def polys(self) -> Tuple[Polynomial, ...]:
        return self._polys

    def __len__(self) -> int:
        return len(self._polys)

    def __iter__(self):
        return iter(self._polys)

    @property
    def leading_monomials(self) -> List[Exponents]:
        return [lm for lm, _ in self._basis]

    def is_unit(self) -> bool:
        return any(sum(lm) == 0 for lm, _ in self._basis)

    def is_zero_ideal(self) -> bool:
        return not self._basis

    def reduce(self, f: Polynomial) -> Polynomial:
        """Forma normal de f"""
        if not self.ring.compatible(f.ring):
            raise RingMismatch(f"{f.ring} no coincide con {self.ring}")
        rem = reduce_terms(f.terms, self._basis, self.order.key, self.ring.p)
        return Polynomial(f.ring, rem, _normalized=True)

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if self.is_unit():
            return True
        return self.reduce(f).is_zero()

    def pure_power_bounds(self) -> List[Optional[int]]:
        """Para cada variable, el menor a con x_i^a líder (None si no hay)"""
        bounds: List[Optional[int]] = [None] * self.ring.nvars
        for lm in self.leading_monomials:
            support = [i for i, e in enumerate(lm) if e]
            if len(support) == 1:
                i = support[0]
                if bounds[i] is None or lm[i] < bounds[i]:
                    bounds[i] = lm[i]
        return bounds

    def is_zero_dimensional(self) -> bool:
        return self.is_unit() or all(b is not None for b in self.pure_power_bounds())

    def __repr__(self) -> str:
        return f"GroebnerBasis({len(self)} elementos, orden={self.order})"


def buchberger(gens: Iterable[Polynomial], order: Optional[MonomialOrder] = None,
               ring: Optional[PolyRing] = None, max_pairs: Optional[int] = None,
               degree_bound: Optional[int] = None) -> GroebnerBasis:
    """
    Base de Groebner reducida de los generadores

    Args:
        gens: generadores (se descartan los ceros)
        order: orden monomial (por defecto el del anillo)
        ring: anillo, necesario solo si gens es vacío
        max_pairs: presupuesto de S-pares procesados
        degree_bound: para entradas homogéneas, ignora S-pares de grado mayor

    Returns:
        GroebnerBasis reducida y mónica
    """
    gens = [g for g in gens if not g.is_zero()]
    if ring is None:
        if not gens:
            raise ValueError("se requiere el anillo para un conjunto vacío de generadores")
        ring = gens[0].ring
    for g in gens:
        if not ring.compatible(g.ring):
            raise RingMismatch(f"{g.ring} no coincide con {ring}")
    order = order or ring.order
    budget = max_pairs if max_pairs is not None else DEFAULT_MAX_GB_PAIRS
    p = ring.p
    key = order.key
    basis_ring = ring.with_order(order)

    if not gens:
        return GroebnerBasis(basis_ring, order, [])

    polys: List[Terms] = []
    lms: List[Exponents] = []
    sugars: List[int] = []
    active: List[int] = []
    pairs: List[_Pair] = []
    unit = [Polynomial(basis_ring, {(0,) * ring.nvars: 1}, _normalized=True)]

    def current_basis():
        return [(lms[i], polys[i]) for i in active]

    def add(h: Terms, sugar: int) -> None:
        nonlocal active, pairs
        lead = max(h, key=key)
        k = len(polys)
        polys.append(_monic_terms(h, lead, p))
        lms.append(lead)
        sugars.append(sugar)
        active, pairs = _update(active, pairs, k, lms, sugars)

    for g in sorted(gens, key=lambda g: key(g.leading_monomial(order))):
        r = reduce_terms(g.terms, current_basis(), key, p)
        if r:
            if all(sum(m) == 0 for m in r):
                return GroebnerBasis(basis_ring, order, unit)
            add(r, g.degree)

    processed = 0
    while pairs:
        pos = min(range(len(pairs)), key=lambda t: (pairs[t].sugar, key(pairs[t].lcm)))
        pair = pairs.pop(pos)
        processed += 1
        if processed > budget:
            raise SearchBudgetExceeded("max_gb_pairs", budget, f"{len(polys)} polinomios en la base parcial")
        if degree_bound is not None and sum(pair.lcm) > degree_bound:
            continue
        s = _s_polynomial(pair, polys, lms, p)
        r = reduce_terms(s, current_basis(), key, p)
        if r:
            if all(sum(m) == 0 for m in r):
                return GroebnerBasis(basis_ring, order, unit, degree_bound, processed)
            add(r, pair.sugar)

    minimal = current_basis()
    reduced: List[Polynomial] = []
    for idx, (lm, f) in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r = reduce_terms(f, others, key, p)
        reduced.append(Polynomial(basis_ring, _monic_terms(r, lm, p), _normalized=True))
    reduced.sort(key=lambda f: key(f.leading_monomial(order)))
    logger.debug(f"Groebner: {len(reduced)} elementos, {processed} S-pares, orden {order}")
    return GroebnerBasis(basis_ring, order, reduced, degree_bound, processed)


def _s_polynomial(pair: _Pair, polys: List[Terms], lms: List[Exponents], p: int) -> Terms:
    out: Terms = {}
    for idx, sign in ((pair.i, 1), (pair.j, -1)):
        shift = monomial_quotient(pair.lcm, lms[idx])
        for m, c in polys[idx].items():
            t = monomial_mul(m, shift)
            v = (out.get(t, 0) + sign * c) % p
            if v:
                out[t] = v
            else:
                out.pop(t, None)
    return out


def _update(active: List[int], pairs: List[_Pair], k: int, lms: List[Exponents],
            sugars: List[int]) -> Tuple[List[int], List[_Pair]]:
    """Actualización de Gebauer-Möller al añadir el elemento k"""
    h = lms[k]
    candidates = list(active)
    kept: List[int] = []
    while candidates:
        i = candidates.pop()
        lcm_hi = monomial_lcm(h, lms[i])
        if _coprime(h, lms[i]):
            kept.append(i)
            continue
        dominated = any(monomial_divides(monomial_lcm(h, lms[j]), lcm_hi) for j in candidates) or \
            any(monomial_divides(monomial_lcm(h, lms[j]), lcm_hi) for j in kept)
        if not dominated:
            kept.append(i)

    new_pairs = []
    for i in kept:
        if _coprime(h, lms[i]):
            continue
        lcm = monomial_lcm(h, lms[i])
        deg = sum(lcm)
        sugar = max(sugars[i] + deg - sum(lms[i]), sugars[k] + deg - sum(h))
        new_pairs.append(_Pair(i, k, lcm, sugar))

    survivors = []
    for pair in pairs:
        if monomial_divides(h, pair.lcm) and \
                monomial_lcm(lms[pair.i], h) != pair.lcm and \
                monomial_lcm(h, lms[pair.j]) != pair.lcm:
            continue
        survivors.append(pair)
    survivors.extend(new_pairs)

    new_active = [i for i in active if not monomial_divides(h, lms[i])]
    new_active.append(k)
    return new_active, survivors


class GroebnerCache:
    """
    Caché asociativo de bases de Groebner

    Clave: (p, variables, orden, cota de grado, generadores mónicos canónicos).
    """

    def __init__(self):
        self._store: Dict[tuple, GroebnerBasis] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    @staticmethod
    def make_key(ring: PolyRing, gens: Sequence[Polynomial], order: MonomialOrder,
                 degree_bound: Optional[int]) -> tuple:
        canon = frozenset(frozenset(g.monic().terms.items()) for g in gens if not g.is_zero())
        return ring.p, ring.variables, order, degree_bound, canon

    def get(self, gens: Sequence[Polynomial], ring: PolyRing, order: Optional[MonomialOrder] = None,
            max_pairs: Optional[int] = None, degree_bound: Optional[int] = None) -> GroebnerBasis:
        order = order or ring.order
        k = self.make_key(ring, gens, order, degree_bound)
        with self._lock:
            cached = self._store.get(k)
            if cached is not None:
                self.hits += 1
                return cached
            self.misses += 1
        basis = buchberger(gens, order=order, ring=ring, max_pairs=max_pairs, degree_bound=degree_bound)
        with self._lock:
            return self._store.setdefault(k, basis)

    def clear(self) -> None:
        with self._lock:
            self._store.clear()
            self.hits = 0
            self.misses = 0

    def __len__(self) -> int:
        return len(self._store)


GROEBNER_CACHE = GroebnerCache()


def groebner_basis(gens: Sequence[Polynomial], ring: Optional[PolyRing] = None,
                   order: Optional[MonomialOrder] = None, max_pairs: Optional[int] = None,
                   degree_bound: Optional[int] = None) -> GroebnerBasis:
    """Base de Groebner a través del caché global"""
    if ring is None:
        ring = gens[0].ring
    return GROEBNER_CACHE.get(list(gens), ring, order, max_pairs, degree_bound)
