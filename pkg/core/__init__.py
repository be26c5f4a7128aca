"""Núcleo compartido: anillos de polinomios sobre F_p, racionales exactos y errores"""
from .errors import FInvariantError
from .polyring import (
    FieldSpec,
    Monomial,
    MonomialOrder,
    PolyRing,
    Polynomial,
    fp_inv,
    frobenius_power,
    is_homogeneous,
    poly_mul,
)
from .rationals import format_rational

__all__ = [
    'FInvariantError',
    'FieldSpec',
    'Monomial',
    'MonomialOrder',
    'PolyRing',
    'Polynomial',
    'fp_inv',
    'frobenius_power',
    'is_homogeneous',
    'poly_mul',
    'format_rational',
]
