"""
Aritmética exacta en F_p y polinomios multivariados dispersos

Los polinomios son valores inmutables: un diccionario exponentes -> coeficiente
(nunca cero, siempre en [1, p-1]) más una referencia al anillo ambiente.
Los términos se exponen ordenados según el orden monomial activo del anillo.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from config.settings import MAX_EXPONENT
from .errors import ExponentOverflow, NotPrime, RingMismatch, ZeroInverse

Exponents = Tuple[int, ...]


ORDER_KINDS = ("grevlex", "lex", "elimination")


def is_prime(n: int) -> bool:
    """Primalidad por división de prueba"""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def fp_inv(a: int, p: int) -> int:
    """
    Inverso multiplicativo en F_p

    Examples:
        fp_inv(2, 5) -> 3
        fp_inv(6, 7) -> 6
    """
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 no es invertible en F_{p}")
    return pow(a, -1, p)


@dataclass(frozen=True)
class FieldSpec:
    """Cuerpo primo F_p"""
    p: int

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise NotPrime(f"la caracteristica debe ser un entero, recibido {self.p!r}")
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} no es primo")

    def inv(self, a: int) -> int:
        return fp_inv(a, self.p)


def monomial_divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def monomial_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def monomial_quotient(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


def monomial_str(exponents: Exponents, variables: Sequence[str]) -> str:
    """x^2*y, o '1' para el monomio constante"""
    factors = []
    for name, e in zip(variables, exponents):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class Monomial:
    """Monomio con grado total cacheado"""
    exponents: Exponents
    total_degree: int = field(init=False)

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"exponentes negativos no soportados: {exps}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "total_degree", sum(exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(monomial_mul(self.exponents, other.exponents))

    def to_str(self, variables: Sequence[str]) -> str:
        return monomial_str(self.exponents, variables)


@lru_cache(maxsize=1 << 18)
def _order_key(kind: str, blocks: Tuple[int, ...], exps: Exponents) -> tuple:
    if kind == "lex":
        return exps
    if kind == "grevlex":
        return (sum(exps), tuple(-e for e in reversed(exps)))
    key = []
    start = 0
    for size in blocks:
        part = exps[start:start + size]
        key.append((sum(part), tuple(-e for e in reversed(part))))
        start += size
    return tuple(key)


@dataclass(frozen=True)
class MonomialOrder:
    """
    Orden monomial: grevlex, lex o eliminación por bloques

    El orden de eliminación compara primero el bloque inicial (grevlex dentro
    de cada bloque), de modo que cualquier monomio que involucre variables del
    primer bloque es mayor que todos los que no las involucran.
    """
    kind: str = "grevlex"
    blocks: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"orden monomial desconocido: {self.kind}")
        if self.kind == "elimination" and (not self.blocks or any(b <= 0 for b in self.blocks)):
            raise ValueError("el orden de eliminacion requiere bloques positivos")
        object.__setattr__(self, "blocks", tuple(self.blocks))

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls("grevlex")

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls("lex")

    @classmethod
    def elimination(cls, *blocks: int) -> "MonomialOrder":
        return cls("elimination", tuple(blocks))

    def key(self, exps: Exponents) -> tuple:
        """Clave de comparación: mayor clave = monomio mayor"""
        return _order_key(self.kind, self.blocks, exps)

    def __str__(self) -> str:
        if self.kind == "elimination":
            return f"elimination{self.blocks}"
        return self.kind


GREVLEX = MonomialOrder.grevlex()


@dataclass(frozen=True)
class PolyRing:
    """Anillo de polinomios F_p[x_1, ..., x_n] con un orden monomial activo"""
    field: FieldSpec
    variables: Tuple[str, ...]
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        names = tuple(self.variables)
        if not names:
            raise ValueError("se requiere al menos una variable")
        if len(set(names)) != len(names):
            raise ValueError(f"variables repetidas: {names}")
        object.__setattr__(self, "variables", names)
        if self.order.kind == "elimination" and sum(self.order.blocks) != len(names):
            raise ValueError("los bloques del orden no cubren todas las variables")

    @classmethod
    def create(cls, p: int, variables: Iterable[str],
               order: Optional[MonomialOrder] = None) -> "PolyRing":
        return cls(FieldSpec(p), tuple(variables), order or GREVLEX)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def compatible(self, other: "PolyRing") -> bool:
        """Mismo cuerpo y mismas variables (el orden puede diferir)"""
        return self.field == other.field and self.variables == other.variables

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.field, self.variables, order)

    def extend(self, names: Sequence[str], order: Optional[MonomialOrder] = None) -> "PolyRing":
        """Anillo con variables nuevas antepuestas (variables de etiqueta)"""
        fresh = []
        for name in names:
            candidate = name
            while candidate in self.variables or candidate in fresh:
                candidate += "_"
            fresh.append(candidate)
        return PolyRing(self.field, tuple(fresh) + self.variables,
                        order or MonomialOrder.elimination(len(fresh), self.nvars))

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): coeff})

    def gen(self, which: Union[int, str]) -> "Polynomial":
        i = self.index(which) if isinstance(which, str) else which
        exps = [0] * self.nvars
        exps[i] = 1
        return self.monomial(exps)

    def gens(self) -> List["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def __str__(self) -> str:
        return f"F_{self.p}[{', '.join(self.variables)}]"


def mul_term_dicts(a: Mapping[Exponents, int], b: Mapping[Exponents, int], p: int) -> Dict[Exponents, int]:
    """Producto de dos diccionarios de términos módulo p"""
    out: Dict[Exponents, int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = (out.get(e, 0) + ca * cb) % p
            if c:
                out[e] = c
            else:
                out.pop(e, None)
    return out


class Polynomial:
    """
    Polinomio disperso sobre F_p

    Inmutable tras la construcción; seguro para compartir entre tareas.
    """
    __slots__ = ("ring", "_terms", "_items", "_hash")

    def __init__(self, ring: PolyRing, terms: Optional[Mapping[Exponents, int]] = None,
                 _normalized: bool = False):
        self.ring = ring
        if _normalized:
            clean = dict(terms or {})
        else:
            p = ring.p
            n = ring.nvars
            clean = {}
            for exps, c in (terms or {}).items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != n:
                    raise RingMismatch(f"monomio {exps} no tiene {n} exponentes")
                if any(e < 0 for e in exps):
                    raise ValueError(f"exponentes negativos no soportados: {exps}")
                c = (clean.get(exps, 0) + int(c)) % p
                if c:
                    clean[exps] = c
                else:
                    clean.pop(exps, None)
        self._terms = clean
        self._items = None
        self._hash = None

    # ------------------------------------------------------------------
    # Acceso
    # ------------------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponents, int]:
        return MappingProxyType(self._terms)

    def items(self) -> List[Tuple[Exponents, int]]:
        """Términos ordenados de mayor a menor según el orden del anillo"""
        if self._items is None:
            key = self.ring.order.key
            self._items = sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)
        return self._items

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def degree(self) -> Optional[int]:
        """Grado total; None para el polinomio cero"""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> Tuple[bool, Optional[int]]:
        degrees = {sum(e) for e in self._terms}
        if not degrees:
            return True, None
        if len(degrees) == 1:
            return True, degrees.pop()
        return False, None

    def homogeneous_components(self) -> Dict[int, "Polynomial"]:
        parts: Dict[int, Dict[Exponents, int]] = {}
        for e, c in self._terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: Polynomial(self.ring, t, _normalized=True) for d, t in sorted(parts.items())}

    def leading_monomial(self, order: Optional[MonomialOrder] = None) -> Exponents:
        if not self._terms:
            raise ValueError("el polinomio cero no tiene monomio lider")
        key = (order or self.ring.order).key
        return max(self._terms, key=key)

    def leading_coefficient(self, order: Optional[MonomialOrder] = None) -> int:
        return self._terms[self.leading_monomial(order)]

    def monic(self, order: Optional[MonomialOrder] = None) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(self.ring.field.inv(self.leading_coefficient(order)))

    # ------------------------------------------------------------------
    # Aritmética
    # ------------------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if not self.ring.compatible(other.ring):
            raise RingMismatch(f"anillos incompatibles: {self.ring} y {other.ring}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out, _normalized=True)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = self.ring.p
        return Polynomial(self.ring, {e: p - c for e, c in self._terms.items()}, _normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.p
        c %= p
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {e: v * c % p for e, v in self._terms.items()}, _normalized=True)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        return Polynomial(self.ring, mul_term_dicts(self._terms, other._terms, self.ring.p),
                          _normalized=True)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("potencias negativas no soportadas")
        deg = self.degree or 0
        if deg * n > MAX_EXPONENT:
            raise ExponentOverflow(f"grado {deg}*{n} excede el tamaño de palabra")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def frobenius_power(self, e: int) -> "Polynomial":
        """f^(p^e) escalando exponentes; los coeficientes de F_p quedan fijos"""
        if e < 0:
            raise ValueError("e debe ser no negativo")
        q = self.ring.p ** e
        top = max((max(exps) for exps in self._terms), default=0)
        if top * q > MAX_EXPONENT:
            raise ExponentOverflow(f"exponente {top}*{q} excede el tamaño de palabra")
        return Polynomial(
            self.ring,
            {tuple(x * q for x in exps): c for exps, c in self._terms.items()},
            _normalized=True,
        )

    def divide_exact(self, g: "Polynomial") -> "Polynomial":
        """
        Cociente exacto self / g

        Raises:
            ZeroDivisionError: si g = 0
            ValueError: si g no divide a self
        """
        self._check(g)
        if g.is_zero():
            raise ZeroDivisionError("division por el polinomio cero")
        key = self.ring.order.key
        p = self.ring.p
        lead_g = g.leading_monomial()
        inv = self.ring.field.inv(g._terms[lead_g])
        rest = dict(self._terms)
        quotient: Dict[Exponents, int] = {}
        while rest:
            m = max(rest, key=key)
            if not monomial_divides(lead_g, m):
                raise ValueError("division no exacta")
            shift = monomial_quotient(m, lead_g)
            c = rest[m] * inv % p
            quotient[shift] = c
            for ge, gc in g._terms.items():
                t = monomial_mul(ge, shift)
                v = (rest.get(t, 0) - c * gc) % p
                if v:
                    rest[t] = v
                else:
                    rest.pop(t, None)
        return Polynomial(self.ring, quotient, _normalized=True)

    # ------------------------------------------------------------------
    # Cambio de anillo
    # ------------------------------------------------------------------

    def embed(self, ring: PolyRing) -> "Polynomial":
        """Lleva el polinomio a un anillo con variables nuevas antepuestas"""
        offset = ring.nvars - self.ring.nvars
        if offset < 0 or ring.variables[offset:] != self.ring.variables or ring.field != self.ring.field:
            raise RingMismatch(f"{ring} no extiende a {self.ring}")
        pad = (0,) * offset
        return Polynomial(ring, {pad + e: c for e, c in self._terms.items()}, _normalized=True)

    def restrict(self, ring: PolyRing) -> "Polynomial":
        """Inversa de embed; exige que las variables eliminadas no aparezcan"""
        offset = self.ring.nvars - ring.nvars
        out = {}
        for e, c in self._terms.items():
            if any(e[:offset]):
                raise RingMismatch("el polinomio involucra variables eliminadas")
            out[e[offset:]] = c
        return Polynomial(ring, out, _normalized=True)

    # ------------------------------------------------------------------
    # Igualdad y presentación
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.compatible(other.ring) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.field.p, self.ring.variables, frozenset(self._terms.items())))
        return self._hash

    def to_str(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.items():
            mono = monomial_str(exps, self.ring.variables)
            if mono == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_str()!r} in {self.ring})"


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    """Producto en forma canónica; RingMismatch si los anillos difieren"""
    return f * g


def frobenius_power(f: Polynomial, e: int) -> Polynomial:
    return f.frobenius_power(e)


def is_homogeneous(f: Polynomial) -> Tuple[bool, Optional[int]]:
    return f.is_homogeneous()
