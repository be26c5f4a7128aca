"""
Series de Hilbert de ideales monomiales

Numerador N(t) de HS(S/I) = N(t)/(1-t)^n por recursión de pivote:
    N(I) = N(I + (x^a)) + t^a * N(I : x^a)
con casos base de generadores coprimos dos a dos.
"""
import logging
from functools import lru_cache
from math import comb
from typing import FrozenSet, List, Optional, Sequence, Tuple

from core.polyring import Exponents

logger = logging.getLogger(__name__)

Numerator = Tuple[int, ...]


def minimalize(gens: Sequence[Exponents]) -> List[Exponents]:
    """Generadores minimales de un ideal monomial"""
    result: List[Exponents] = []
    for m in sorted(set(gens), key=sum):
        if not any(all(a <= b for a, b in zip(g, m)) for g in result):
            result.append(m)
    return result


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] += y
    return out


def _trim(a: Sequence[int]) -> Numerator:
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return tuple(a)


def _pairwise_coprime(gens: Sequence[Exponents]) -> bool:
    seen = set()
    for g in gens:
        support = {i for i, e in enumerate(g) if e}
        if seen & support:
            return False
        seen |= support
    return True


@lru_cache(maxsize=1 << 16)
def _numerator(gens: FrozenSet[Exponents]) -> Numerator:
    gens_list = minimalize(list(gens))
    if not gens_list:
        return (1,)
    if any(sum(g) == 0 for g in gens_list):
        return (0,)
    if _pairwise_coprime(gens_list):
        result: List[int] = [1]
        for g in gens_list:
            factor = [0] * (sum(g) + 1)
            factor[0] = 1
            factor[-1] -= 1
            result = _poly_mul(result, factor)
        return _trim(result)

    # variable que aparece en más generadores no puros
    n = len(gens_list[0])
    counts = [0] * n
    for g in gens_list:
        if sum(1 for e in g if e) > 1:
            for i, e in enumerate(g):
                if e:
                    counts[i] += 1
    var = max(range(n), key=lambda i: counts[i])
    exps = sorted(g[var] for g in gens_list if g[var] and sum(1 for e in g if e) > 1)
    a = exps[len(exps) // 2]

    pivot = tuple(a if i == var else 0 for i in range(n))
    left = frozenset(gens_list + [pivot])
    right = frozenset(
        tuple(max(e - a, 0) if i == var else e for i, e in enumerate(g)) for g in gens_list
    )
    shifted = [0] * a + list(_numerator(right))
    return _trim(_poly_add(_numerator(left), shifted))


def hilbert_numerator(gens: Sequence[Exponents], nvars: int) -> Numerator:
    """
    Numerador de la serie de Hilbert de S/(gens) con S en nvars variables

    Examples:
        hilbert_numerator([], 2) -> (1,)
        hilbert_numerator([(1, 1)], 2) -> (1, 0, -1)
    """
    gens = [tuple(g) for g in gens]
    if any(len(g) != nvars for g in gens):
        raise ValueError("longitud de exponentes incorrecta")
    return _numerator(frozenset(gens))


def dimension_and_degree(numerator: Sequence[int], nvars: int) -> Tuple[int, int]:
    """
    Dimensión de Krull y multiplicidad a partir del numerador

    Se divide N(t) por (1-t) mientras N(1) = 0; si se divide k veces,
    dim = n - k y e = N_k(1). Para el anillo cero devuelve (-1, 0).
    """
    current = list(numerator)
    if not any(current):
        return -1, 0
    k = 0
    while sum(current) == 0:
        current = _divide_one_minus_t(current)
        k += 1
    return nvars - k, sum(current)


def _divide_one_minus_t(coeffs: Sequence[int]) -> List[int]:
    """Cociente exacto por (1 - t): sumas prefijas"""
    out = []
    acc = 0
    for c in coeffs:
        acc += c
        out.append(acc)
    if out and out[-1] != 0:
        raise ValueError("division no exacta por (1 - t)")
    return list(_trim(out[:-1] or [0]))


def hilbert_function_value(numerator: Sequence[int], nvars: int, t: int) -> int:
    """Dimensión de la pieza de grado t de S/I"""
    if t < 0:
        return 0
    total = 0
    for i, c in enumerate(numerator):
        if c and i <= t:
            total += c * comb(t - i + nvars - 1, nvars - 1)
    return total


def artinian_h_vector(numerator: Sequence[int], nvars: int) -> Optional[List[int]]:
    """
    Serie de Hilbert de un cociente de dimensión cero (polinomio en t)

    Returns:
        Lista de dimensiones por grado, o None si el cociente no es artiniano
    """
    current = list(numerator)
    for _ in range(nvars):
        if sum(current) != 0:
            return None
        current = _divide_one_minus_t(current)
    return list(_trim(current))
