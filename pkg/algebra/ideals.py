"""
Ideales, anillos cociente y operaciones basadas en Groebner

- pertenencia y contención
- intersección por variable de etiqueta (t*I + (1-t)*J, eliminando t)
- cociente (I : J) generador a generador: (I : g) = (1/g) * (I ∩ (g))
- pertenencia al radical (truco de Rabinowitsch)
- monomios estándar y datos de Hilbert del cociente
"""
import logging
import threading
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from core.errors import (
    DivisionByZeroGenerator,
    NotHomogeneous,
    NotZeroDimensional,
    RingMismatch,
    UnitIdeal,
)
from core.polyring import (
    GREVLEX,
    Exponents,
    Monomial,
    MonomialOrder,
    PolyRing,
    Polynomial,
    monomial_divides,
)
from .groebner import GroebnerBasis, groebner_basis
from .hilbert import dimension_and_degree, hilbert_numerator

logger = logging.getLogger(__name__)


class Ideal:
    """
    Ideal dado por generadores no nulos (sin duplicados salvo escalar)

    La base de Groebner se obtiene del caché global; mu y el grado máximo de
    un generador minimal se guardan por contexto al calcularse.
    """

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial] = ()):
        gens: List[Polynomial] = []
        seen = set()
        for g in generators:
            if not ring.compatible(g.ring):
                raise RingMismatch(f"{g.ring} no coincide con {ring}")
            if g.is_zero():
                continue
            canon = g.monic()
            if canon in seen:
                continue
            seen.add(canon)
            gens.append(g)
        self.ring = ring
        self._generators = tuple(gens)
        self.minimal_data: Dict[object, Tuple[int, int]] = {}

    @classmethod
    def maximal(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, ring.gens())

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [ring.one()])

    @classmethod
    def zero(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [])

    @property
    def generators(self) -> Tuple[Polynomial, ...]:
        return self._generators

    def groebner(self, order: Optional[MonomialOrder] = None, max_pairs: Optional[int] = None,
                 degree_bound: Optional[int] = None) -> GroebnerBasis:
        return groebner_basis(self._generators, ring=self.ring, order=order,
                              max_pairs=max_pairs, degree_bound=degree_bound)

    def contains(self, f: Polynomial, max_pairs: Optional[int] = None) -> bool:
        if f.is_zero():
            return True
        if not self._generators:
            return False
        return self.groebner(max_pairs=max_pairs).contains(f)

    def __contains__(self, f: Polynomial) -> bool:
        return self.contains(f)

    def is_zero(self) -> bool:
        return not self._generators

    def is_unit(self) -> bool:
        if not self._generators:
            return False
        if any(g.is_constant() for g in self._generators):
            return True
        return self.groebner().is_unit()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous()[0] for g in self._generators)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self._generators)

    def is_m_primary(self) -> bool:
        """Potencia pura de cada variable en el ideal inicial"""
        if not self._generators:
            return False
        return self.groebner().is_zero_dimensional()

    def is_maximal_ideal(self) -> bool:
        """True si el ideal es el maximal irrelevante (x_1, ..., x_n)"""
        if any(g.is_constant() for g in self._generators):
            return False
        if any((0,) * self.ring.nvars in g.terms for g in self._generators):
            return False
        return all(self.contains(x) for x in self.ring.gens())

    def max_degree(self) -> int:
        return max((g.degree for g in self._generators), default=0)

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, self._generators + other._generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, [f * g for f in self._generators for g in other._generators])

    def _check(self, other: "Ideal") -> None:
        if not self.ring.compatible(other.ring):
            raise RingMismatch(f"{other.ring} no coincide con {self.ring}")

    def same_as(self, other: "Ideal") -> bool:
        """Igualdad de ideales comparando bases reducidas"""
        self._check(other)
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return [f.terms for f in self.groebner()] == [f.terms for f in other.groebner()]

    def leading_monomials(self, order: Optional[MonomialOrder] = None) -> List[Exponents]:
        if not self._generators:
            return []
        return self.groebner(order).leading_monomials

    def to_strs(self) -> List[str]:
        return [g.to_str() for g in self._generators]

    def __repr__(self) -> str:
        return f"Ideal({', '.join(self.to_strs()) or '0'})"


@dataclass(frozen=True)
class HilbertData:
    """Numerador de la serie de Hilbert y datos derivados"""
    numerator: Tuple[int, ...]
    nvars: int
    dim: int
    degree: int


class QuotientContext:
    """
    Anillo R = S/I con I homogéneo (posiblemente cero)

    dim y los datos de Hilbert se calculan una sola vez.
    """

    def __init__(self, ring: PolyRing, defining_ideal: Optional[Ideal] = None):
        defining_ideal = defining_ideal or Ideal.zero(ring)
        if not ring.compatible(defining_ideal.ring):
            raise RingMismatch("el ideal que define el cociente vive en otro anillo")
        if not defining_ideal.is_homogeneous():
            raise NotHomogeneous("el ideal que define el cociente no es homogéneo")
        if defining_ideal.is_unit():
            raise UnitIdeal("el ideal que define el cociente es el ideal unidad")
        self.ring = ring
        self.defining_ideal = defining_ideal
        self._hilbert: Optional[HilbertData] = None
        self._lock = threading.Lock()

    @classmethod
    def create(cls, p: int, variables: Sequence[str],
               quotient: Sequence[Polynomial] = ()) -> "QuotientContext":
        ring = PolyRing.create(p, variables)
        return cls(ring, Ideal(ring, quotient))

    @property
    def field(self):
        return self.ring.field

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.ring.variables

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def is_polynomial_ring(self) -> bool:
        return self.defining_ideal.is_zero()

    def maximal_ideal(self) -> Ideal:
        return Ideal.maximal(self.ring)

    def lift(self, ideal: Ideal) -> Ideal:
        """ideal + I en el anillo ambiente"""
        return ideal + self.defining_ideal

    def hilbert(self) -> HilbertData:
        with self._lock:
            if self._hilbert is None:
                lms = self.defining_ideal.leading_monomials()
                numerator = hilbert_numerator(lms, self.nvars)
                dim, degree = dimension_and_degree(numerator, self.nvars)
                self._hilbert = HilbertData(numerator, self.nvars, dim, degree)
                logger.debug(f"Hilbert de {self}: dim={dim}, e={degree}")
            return self._hilbert

    @property
    def dim(self) -> int:
        return self.hilbert().dim

    def cache_key(self) -> tuple:
        return self.p, self.variables, frozenset(g.monic() for g in self.defining_ideal.generators)

    def describe(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "variables": list(self.variables),
            "quotient": self.defining_ideal.to_strs(),
        }

    def __str__(self) -> str:
        if self.is_polynomial_ring():
            return str(self.ring)
        return f"{self.ring}/({', '.join(self.defining_ideal.to_strs())})"


# ==========================================
# OPERACIONES
# ==========================================

def ideal_membership(f: Polynomial, ideal: Ideal) -> bool:
    return ideal.contains(f)


def ideal_contains(big: Ideal, small: Ideal) -> bool:
    """True si cada generador de small reduce a cero módulo big"""
    big._check(small)
    return all(big.contains(g) for g in small.generators)


def _tag_ring(ring: PolyRing) -> PolyRing:
    return ring.extend(["t"], MonomialOrder.elimination(1, ring.nvars))


def intersect_ideals(first: Ideal, second: Ideal, max_pairs: Optional[int] = None) -> Ideal:
    """
    I ∩ J eliminando t de t*I + (1-t)*J
    """
    first._check(second)
    ring = first.ring
    if first.is_zero() or second.is_zero():
        return Ideal.zero(ring)
    if first.is_monomial() and second.is_monomial():
        return _monomial_intersection(first, second)
    tag = _tag_ring(ring)
    t = tag.gen(0)
    one_minus_t = tag.one() - t
    gens = [t * g.embed(tag) for g in first.generators]
    gens += [one_minus_t * g.embed(tag) for g in second.generators]
    basis = groebner_basis(gens, ring=tag, max_pairs=max_pairs)
    kept = [f.restrict(ring) for f in basis if f.leading_monomial(tag.order)[0] == 0]
    return Ideal(ring, kept)


def _monomial_intersection(first: Ideal, second: Ideal) -> Ideal:
    ring = first.ring
    gens = []
    for f in first.generators:
        for g in second.generators:
            a = next(iter(f.terms))
            b = next(iter(g.terms))
            gens.append(ring.monomial([max(x, y) for x, y in zip(a, b)]))
    return Ideal(ring, gens)


def colon_ideal(ideal: Ideal, divisor: Union[Ideal, Sequence[Polynomial]],
                max_pairs: Optional[int] = None) -> Ideal:
    """
    (I : J) = {f : f*J ⊆ I}

    Raises:
        DivisionByZeroGenerator: si J tiene un generador nulo o es el ideal cero
    """
    ring = ideal.ring
    if isinstance(divisor, Ideal):
        divisor_gens = list(divisor.generators)
    else:
        divisor_gens = list(divisor)
        if any(g.is_zero() for g in divisor_gens):
            raise DivisionByZeroGenerator("un generador del divisor es cero")
    if not divisor_gens:
        raise DivisionByZeroGenerator("el divisor es el ideal cero")

    result: Optional[Ideal] = None
    for g in divisor_gens:
        if not ring.compatible(g.ring):
            raise RingMismatch(f"{g.ring} no coincide con {ring}")
        part = _colon_principal(ideal, g, max_pairs)
        result = part if result is None else intersect_ideals(result, part, max_pairs)
    return result


def _colon_principal(ideal: Ideal, g: Polynomial, max_pairs: Optional[int]) -> Ideal:
    ring = ideal.ring
    if ideal.contains(g, max_pairs=max_pairs):
        return Ideal.unit(ring)
    if ideal.is_zero():
        return Ideal.zero(ring)
    if ideal.is_monomial() and g.is_monomial():
        (gm,) = g.terms
        gens = []
        for f in ideal.generators:
            (fm,) = f.terms
            gens.append(ring.monomial([max(a - b, 0) for a, b in zip(fm, gm)]))
        return Ideal(ring, gens)
    inter = intersect_ideals(ideal, Ideal(ring, [g]), max_pairs)
    return Ideal(ring, [h.divide_exact(g) for h in inter.generators])


def radical_membership(f: Polynomial, ideal: Ideal, max_pairs: Optional[int] = None) -> bool:
    """f ∈ √I  sii  1 ∈ I + (1 - t*f) en S[t]"""
    if f.is_zero() or ideal.contains(f, max_pairs=max_pairs):
        return True
    if ideal.is_zero():
        return False
    homogeneous_f, _ = f.is_homogeneous()
    if homogeneous_f and ideal.is_homogeneous() and ideal.is_m_primary() and \
            (0,) * f.ring.nvars not in f.terms:
        return True
    tag = ideal.ring.extend(["t"], GREVLEX)
    t = tag.gen(0)
    gens = [g.embed(tag) for g in ideal.generators]
    gens.append(tag.one() - t * f.embed(tag))
    return groebner_basis(gens, ring=tag, max_pairs=max_pairs).is_unit()


def standard_monomials(ideal: Ideal, ctx: QuotientContext) -> List[Monomial]:
    """
    Monomios fuera del ideal inicial de ideal + I

    Raises:
        NotZeroDimensional: si falta una potencia pura de alguna variable
    """
    lifted = ctx.lift(ideal)
    if lifted.is_zero():
        raise NotZeroDimensional("el ideal cero no es m-primario")
    basis = lifted.groebner()
    if basis.is_unit():
        return []
    bounds = basis.pure_power_bounds()
    missing = [ctx.variables[i] for i, b in enumerate(bounds) if b is None]
    if missing:
        raise NotZeroDimensional(f"sin potencia pura en el ideal inicial para: {', '.join(missing)}")
    lms = basis.leading_monomials
    found = []
    for exps in product(*(range(b) for b in bounds)):
        if not any(monomial_divides(lm, exps) for lm in lms):
            found.append(Monomial(exps))
    found.sort(key=lambda m: (m.total_degree, GREVLEX.key(m.exponents)))
    return found


def initial_numerator(ideal: Ideal) -> Tuple[int, ...]:
    """Numerador de Hilbert de S/in(ideal)"""
    return hilbert_numerator(ideal.leading_monomials(), ideal.ring.nvars)


def hilbert_dimension_degree(ctx: QuotientContext) -> Tuple[int, int]:
    data = ctx.hilbert()
    return data.dim, data.degree
