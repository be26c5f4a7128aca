"""Módulo de álgebra conmutativa computacional"""
from .groebner import GroebnerBasis, buchberger, groebner_basis
from .ideals import (
    Ideal,
    QuotientContext,
    colon_ideal,
    hilbert_dimension_degree,
    ideal_contains,
    ideal_membership,
    intersect_ideals,
    radical_membership,
    standard_monomials,
)
from .calculus import (
    PowerCache,
    bracket_power,
    ideal_power,
    in_quotient,
    minimal_generators,
)

__all__ = [
    'GroebnerBasis',
    'buchberger',
    'groebner_basis',
    'Ideal',
    'QuotientContext',
    'colon_ideal',
    'hilbert_dimension_degree',
    'ideal_contains',
    'ideal_membership',
    'intersect_ideals',
    'radical_membership',
    'standard_monomials',
    'PowerCache',
    'bracket_power',
    'ideal_power',
    'in_quotient',
    'minimal_generators',
]
