"""
Álgebra lineal densa módulo p (numpy)

Sirve de oráculo independiente del motor de Groebner y para calcular, grado
a grado, cocientes (m^[q] : G) y sus colongitudes sobre la caja de exponentes
{0, ..., q-1}^n que forma una base de S/m^[q].
Las entradas son int64: se asume p < 2^26.
"""
import logging
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import SearchBudgetExceeded
from core.polyring import Exponents, PolyRing, Polynomial

logger = logging.getLogger(__name__)


def rref_mod_p(matrix: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Forma escalonada reducida por filas sobre F_p; devuelve (R, columnas pivote)"""
    A = np.array(matrix, dtype=np.int64) % p
    rows, cols = A.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(A[r:, c])[0]
        if nonzero.size == 0:
            continue
        k = r + int(nonzero[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        column = A[:, c].copy()
        column[r] = 0
        mask = np.nonzero(column)[0]
        if mask.size:
            A[mask] = (A[mask] - np.outer(column[mask], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    if matrix.size == 0:
        return 0
    return len(rref_mod_p(matrix, p)[1])


def nullspace_mod_p(matrix: np.ndarray, p: int) -> np.ndarray:
    """Base del núcleo {v : M v = 0} como filas"""
    rows, cols = matrix.shape
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = rref_mod_p(matrix, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = (-R[i, f]) % p
    return basis


# ==========================================
# MONOMIOS POR GRADO
# ==========================================

def monomials_of_degree(nvars: int, degree: int, bound: Optional[int] = None) -> List[Exponents]:
    """Monomios de grado dado (con exponentes < bound si se indica)"""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        if bound is None or max(exps, default=0) < bound:
            out.append(tuple(exps))
    return out


def _check_size(count: int, limit: Optional[int]) -> None:
    if limit is not None and count > limit:
        raise SearchBudgetExceeded("dense_limit", limit, f"pieza de dimension {count}")


def homogeneous_span(generators: Sequence[Polynomial], degree: int, nvars: int, p: int,
                     limit: Optional[int] = None) -> Tuple[np.ndarray, Dict[Exponents, int]]:
    """Matriz cuyas filas generan [ideal]_degree en la base de monomios de ese grado"""
    columns = monomials_of_degree(nvars, degree)
    _check_size(len(columns), limit)
    index = {m: i for i, m in enumerate(columns)}
    rows = []
    for g in generators:
        for part_degree, part in g.homogeneous_components().items():
            if part_degree > degree:
                continue
            for shift in monomials_of_degree(nvars, degree - part_degree):
                row = np.zeros(len(columns), dtype=np.int64)
                for exps, c in part.terms.items():
                    row[index[tuple(a + b for a, b in zip(exps, shift))]] = c
                rows.append(row)
    matrix = np.array(rows, dtype=np.int64).reshape(len(rows), len(columns))
    return matrix, index


def dense_contains(generators: Sequence[Polynomial], f: Polynomial, limit: Optional[int] = None) -> bool:
    """
    Pertenencia de f al ideal homogéneo generado, grado a grado

    Independiente del motor de Groebner: compara rangos de la pieza de grado d
    con y sin las componentes de f.
    """
    ring = f.ring
    for degree, part in f.homogeneous_components().items():
        span, index = homogeneous_span(generators, degree, ring.nvars, ring.p, limit)
        vector = np.zeros((1, len(index)), dtype=np.int64)
        for exps, c in part.terms.items():
            vector[0, index[exps]] = c
        base_rank = rank_mod_p(span, ring.p) if span.size else 0
        extended = np.vstack([span, vector]) if span.size else vector
        if rank_mod_p(extended, ring.p) != base_rank:
            return False
    return True


def dense_power_generators(generators: Sequence[Polynomial], t: int) -> List[Polynomial]:
    """Productos de t generadores (sin escalera de Groebner ni caché)"""
    ring = generators[0].ring
    if t == 0:
        return [ring.one()]
    out = {}
    for combo in combinations_with_replacement(range(len(generators)), t):
        h = ring.one()
        for i in combo:
            h = h * generators[i]
        if not h.is_zero():
            out[h.monic()] = None
    return list(out)


def dense_nu(a_gens: Sequence[Polynomial], target_gens: Sequence[Polynomial], t_max: int,
             limit: Optional[int] = None) -> int:
    """
    Mayor t <= t_max con a^t ⊄ (target), por barrido lineal denso

    Oráculo para pruebas: no usa bases de Groebner.
    """
    for t in range(1, t_max + 2):
        powers = dense_power_generators(a_gens, t)
        if all(dense_contains(target_gens, h, limit) for h in powers):
            return t - 1
    raise SearchBudgetExceeded("max_power", t_max, "el oraculo denso no encontro contencion")


# ==========================================
# CAJA DE EXPONENTES DE S/m^[q]
# ==========================================

def box_monomials(nvars: int, q: int, degree: int) -> List[Exponents]:
    """Monomios de grado dado con todos los exponentes < q"""
    if degree < 0 or degree > nvars * (q - 1):
        return []
    return _box(nvars, q, degree)


def _box(nvars: int, q: int, degree: int) -> List[Exponents]:
    if nvars == 1:
        return [(degree,)] if degree < q else []
    out = []
    for first in range(min(q - 1, degree), -1, -1):
        for rest in _box(nvars - 1, q, degree - first):
            out.append((first,) + rest)
    return out


def box_size(nvars: int, q: int, degree: int) -> int:
    """Número de monomios de grado dado en la caja (inclusión-exclusión)"""
    total = 0
    for k in range(nvars + 1):
        rest = degree - k * q
        if rest < 0:
            break
        total += (-1) ** k * comb(nvars, k) * comb(rest + nvars - 1, nvars - 1)
    return total


def _homogeneous_pieces(polys: Sequence[Polynomial]) -> List[Tuple[int, Dict[Exponents, int]]]:
    pieces = []
    for g in polys:
        for d, part in g.homogeneous_components().items():
            pieces.append((d, dict(part.terms)))
    return pieces


def _multiplication_matrix(domain: List[Exponents], pieces, nvars: int, q: int, degree: int,
                           p: int, limit: Optional[int] = None) -> np.ndarray:
    """Filas: monomios imagen en la caja; columnas: monomios del dominio"""
    blocks = []
    for d, terms in pieces:
        _check_size(box_size(nvars, q, degree + d), limit)
        codomain = box_monomials(nvars, q, degree + d)
        if not codomain:
            continue
        index = {m: i for i, m in enumerate(codomain)}
        block = np.zeros((len(codomain), len(domain)), dtype=np.int64)
        for j, u in enumerate(domain):
            for v, c in terms.items():
                w = tuple(a + b for a, b in zip(u, v))
                i = index.get(w)
                if i is not None:
                    block[i, j] = (block[i, j] + c) % p
        blocks.append(block)
    if not blocks:
        return np.zeros((0, len(domain)), dtype=np.int64)
    return np.vstack(blocks)


def box_colon_rank(ring: PolyRing, q: int, polys: Sequence[Polynomial],
                   limit: Optional[int] = None) -> int:
    """
    Colongitud de S/(m^[q] : G)

    S/(m^[q] : G) se sumerge en (S/m^[q])^|G| vía h -> (h*g); su dimensión es
    el rango de la multiplicación apilada, sumado grado a grado.
    """
    n, p = ring.nvars, ring.p
    pieces = _homogeneous_pieces(polys)
    total = 0
    for degree in range(n * (q - 1) + 1):
        _check_size(box_size(n, q, degree), limit)
        domain = box_monomials(n, q, degree)
        if not domain:
            continue
        matrix = _multiplication_matrix(domain, pieces, n, q, degree, p, limit)
        total += rank_mod_p(matrix, p)
    return total


def box_colon_generators(ring: PolyRing, q: int, polys: Sequence[Polynomial],
                         limit: Optional[int] = None) -> List[Polynomial]:
    """
    Generadores homogéneos minimales de (m^[q] : G)

    En cada grado se calcula el núcleo de la multiplicación apilada sobre la
    caja, y se añaden solo los vectores que no provienen de grados menores.
    Se incluyen las potencias x_i^q que no sean redundantes.
    """
    n, p = ring.nvars, ring.p
    pieces = _homogeneous_pieces(polys)
    generators: List[Polynomial] = []
    previous_kernel: List[Dict[Exponents, int]] = []
    for degree in range(n * (q - 1) + 1):
        _check_size(box_size(n, q, degree), limit)
        domain = box_monomials(n, q, degree)
        if not domain:
            break
        index = {m: i for i, m in enumerate(domain)}
        matrix = _multiplication_matrix(domain, pieces, n, q, degree, p, limit)
        kernel = nullspace_mod_p(matrix, p) if matrix.shape[0] else np.eye(len(domain), dtype=np.int64)

        # espacio que ya generan los grados menores (multiplicando por variables)
        inherited = []
        for h in previous_kernel:
            for i in range(n):
                row = np.zeros(len(domain), dtype=np.int64)
                for exps, c in h.items():
                    w = list(exps)
                    w[i] += 1
                    j = index.get(tuple(w))
                    if j is not None:
                        row[j] = c
                if row.any():
                    inherited.append(row)

        reduced = kernel % p
        if inherited and reduced.size:
            span, span_pivots = rref_mod_p(np.array(inherited), p)
            if span_pivots:
                reduced = (reduced - reduced[:, span_pivots] @ span) % p
        if reduced.size:
            complement, _ = rref_mod_p(reduced, p)
            for vector in complement:
                generators.append(Polynomial(
                    ring, {domain[j]: int(vector[j]) for j in np.nonzero(vector)[0]}))
        previous_kernel = [
            {domain[j]: int(v[j]) for j in np.nonzero(v)[0]} for v in kernel
        ]
    for i in range(n):
        exps = [0] * n
        exps[i] = q
        generators.append(ring.monomial(exps))
    logger.debug(f"(m^[{q}] : G): {len(generators)} generadores")
    return generators
