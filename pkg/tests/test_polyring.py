"""
Tests unitarios para aritmética en F_p y polinomios dispersos
"""
import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Agregar path del proyecto
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.errors import ExponentOverflow, NotPrime, RingMismatch, ZeroInverse
from core.polyring import (
    MonomialOrder,
    PolyRing,
    Polynomial,
    fp_inv,
    frobenius_power,
    is_homogeneous,
    is_prime,
    poly_mul,
)
from core.rationals import format_interval, format_rational, intersect, scale


@pytest.fixture
def ring():
    return PolyRing.create(5, ["x", "y"])


class TestPrimeField:
    """Tests para F_p"""

    def test_inversos(self):
        """Test: inverso modular"""
        assert fp_inv(2, 5) == 3
        assert fp_inv(6, 7) == 6
        assert fp_inv(-1, 7) == 6

    def test_cero_no_invertible(self):
        """Test: 0 no tiene inverso"""
        with pytest.raises(ZeroInverse):
            fp_inv(0, 5)
        with pytest.raises(ZeroDivisionError):
            fp_inv(10, 5)

    def test_primalidad(self):
        assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]

    def test_caracteristica_no_prima(self):
        """Test: un anillo sobre F_4 se rechaza"""
        with pytest.raises(NotPrime):
            PolyRing.create(4, ["x"])


class TestPolynomialArithmetic:
    """Tests para suma, producto y potencias"""

    def test_frobenius_es_aditivo(self, ring):
        """Test: (x + y)^5 = x^5 + y^5 en característica 5"""
        x, y = ring.gens()
        assert (x + y) ** 5 == x ** 5 + y ** 5

    def test_frobenius_power_escala_exponentes(self, ring):
        x, y = ring.gens()
        f = x + 2 * y * x
        assert f.frobenius_power(1) == f ** 5
        assert f.frobenius_power(0) == f

    def test_funciones_de_modulo(self, ring):
        x, y = ring.gens()
        assert poly_mul(x + y, x - y) == x ** 2 - y ** 2
        assert frobenius_power(x + y, 2) == x ** 25 + y ** 25
        assert is_homogeneous(x * y + y ** 2) == (True, 2)

    def test_coeficientes_normalizados(self, ring):
        x, _ = ring.gens()
        f = 7 * x - 2 * x
        assert f.is_zero(), "7x - 2x = 5x = 0 en F_5"
        assert f.degree is None

    def test_anillos_incompatibles(self, ring):
        """Test: mezclar F_5 y F_3 levanta RingMismatch"""
        other = PolyRing.create(3, ["x", "y"])
        with pytest.raises(RingMismatch):
            ring.gen("x") + other.gen("x")

    def test_overflow_de_exponente(self, ring):
        with pytest.raises(ExponentOverflow):
            ring.gen("x").frobenius_power(100)

    def test_division_exacta(self, ring):
        x, y = ring.gens()
        assert (x ** 2 - y ** 2).divide_exact(x - y) == x + y
        with pytest.raises(ValueError):
            (x ** 2 + y).divide_exact(x)
        with pytest.raises(ZeroDivisionError):
            x.divide_exact(ring.zero())


class TestGradedData:
    """Tests para grados, homogeneidad y términos líderes"""

    def test_homogeneidad(self, ring):
        x, y = ring.gens()
        assert (x ** 2 + x * y).is_homogeneous() == (True, 2)
        assert (x + y ** 2).is_homogeneous() == (False, None)
        assert ring.zero().is_homogeneous() == (True, None)

    def test_componentes_homogeneas(self, ring):
        x, y = ring.gens()
        parts = (x + y ** 2 + 3).homogeneous_components()
        assert sorted(parts) == [0, 1, 2]
        assert parts[2] == y ** 2

    def test_monomio_lider_segun_orden(self, ring):
        x, y = ring.gens()
        f = x + y ** 5
        assert f.leading_monomial() == (0, 5)
        assert f.leading_monomial(MonomialOrder.lex()) == (1, 0)

    def test_monic(self, ring):
        x, y = ring.gens()
        f = (3 * x + y).monic()
        assert f.leading_coefficient() == 1
        assert f == x + 2 * y

    def test_representacion_texto(self, ring):
        f = Polynomial(ring, {(2, 1): 4, (0, 0): 3})
        assert f.to_str() == "4*x^2*y + 3"

    def test_embed_restrict(self, ring):
        tag = ring.extend(["t"])
        f = ring.gen("x") * ring.gen("y")
        assert f.embed(tag).restrict(ring) == f
        assert tag.variables == ("t", "x", "y")


class TestRationals:
    """Tests para el formato exacto de racionales"""

    def test_formato(self):
        assert format_rational(Fraction(48, 25)) == "48/25"
        assert format_rational(2) == "2/1"
        assert format_interval(Fraction(0), Fraction(3)) == "[0/1, 3/1]"

    def test_intervalos(self):
        a = (Fraction(0), Fraction(11, 5))
        b = scale((Fraction(8, 5), Fraction(11, 5)), 5)
        assert b == (Fraction(8), Fraction(11))
        assert intersect(b, (Fraction(10), Fraction(12))) == (Fraction(10), Fraction(11))
        assert intersect(a, b) is None
