"""
Racionales exactos para intervalos certificados

Todo racional sale serializado como "numerador/denominador"; nunca floats.
"""
from fractions import Fraction
from typing import Optional, Tuple, Union

Interval = Tuple[Fraction, Fraction]


def format_rational(value: Union[Fraction, int]) -> str:
    """
    Examples:
        Fraction(48, 25) -> "48/25"
        2 -> "2/1"
    """
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_interval(lower: Fraction, upper: Fraction) -> str:
    return f"[{format_rational(lower)}, {format_rational(upper)}]"


def scale(interval: Interval, factor: Union[Fraction, int]) -> Interval:
    return interval[0] * factor, interval[1] * factor


def intersect(a: Interval, b: Interval) -> Optional[Interval]:
    """Intersección de dos intervalos cerrados; None si son disjuntos"""
    lower = max(a[0], b[0])
    upper = min(a[1], b[1])
    return (lower, upper) if lower <= upper else None
