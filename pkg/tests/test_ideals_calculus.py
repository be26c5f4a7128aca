"""
Tests de ideales, cocientes, potencias y series de Hilbert
"""
import sys
from pathlib import Path

import numpy as np
import pytest

# Agregar path del proyecto
sys.path.insert(0, str(Path(__file__).parent.parent))

from algebra import calculus
from algebra.calculus import (
    PowerCache,
    bracket_power,
    clear_power_cache,
    ideal_power,
    ideal_product,
    ideal_sum,
    in_quotient,
    minimal_generators,
    power_contained,
)
from algebra.dense import box_colon_rank, box_size, dense_contains, rank_mod_p
from algebra.hilbert import (
    artinian_h_vector,
    dimension_and_degree,
    hilbert_function_value,
    hilbert_numerator,
    minimalize,
)
from algebra.ideals import (
    Ideal,
    colon_ideal,
    hilbert_dimension_degree,
    ideal_contains,
    ideal_membership,
    intersect_ideals,
    radical_membership,
    standard_monomials,
)
from core.errors import DivisionByZeroGenerator, NotHomogeneous, NotZeroDimensional, SearchBudgetExceeded
from tests.conftest import make_context, make_ideal


class TestIdealOperations:
    """Tests de pertenencia, intersección y cociente"""

    def test_pertenencia(self, regular_plane):
        J = make_ideal(regular_plane, "x^2", "x*y", "y^3")
        x, y = regular_plane.ring.gens()
        assert x ** 2 * y in J
        assert y ** 2 not in J

    def test_interseccion_monomial_y_general(self, regular_plane_p3):
        ctx = regular_plane_p3
        x, y = ctx.ring.gens()
        first = make_ideal(ctx, "x")
        second = make_ideal(ctx, "y")
        assert intersect_ideals(first, second).same_as(make_ideal(ctx, "x*y"))

        # misma intersección con generadores no monomiales
        third = make_ideal(ctx, "x + y")
        inter = intersect_ideals(first, third)
        assert inter.same_as(make_ideal(ctx, "x^2 + x*y"))

    def test_cociente(self, regular_plane):
        """Test: (x^2, xy) : x = (x, y)"""
        ctx = regular_plane
        x, _ = ctx.ring.gens()
        J = make_ideal(ctx, "x^2", "x*y")
        assert colon_ideal(J, [x]).same_as(ctx.maximal_ideal())

    def test_cociente_no_monomial(self, quadric_cone):
        """Test: ((xy - zw) + (x)) : z contiene a w"""
        ctx = quadric_cone
        ring = ctx.ring
        I = ctx.lift(make_ideal(ctx, "x"))
        colon = colon_ideal(I, [ring.gen("z")])
        assert colon.contains(ring.gen("w"))
        assert colon.contains(ring.gen("x"))
        assert not colon.contains(ring.gen("y"))

    def test_cociente_por_cero(self, regular_plane):
        J = make_ideal(regular_plane, "x")
        with pytest.raises(DivisionByZeroGenerator):
            colon_ideal(J, [regular_plane.ring.zero()])
        with pytest.raises(DivisionByZeroGenerator):
            colon_ideal(J, Ideal.zero(regular_plane.ring))

    def test_radical(self, regular_plane):
        ctx = regular_plane
        x, y = ctx.ring.gens()
        J = make_ideal(ctx, "x^3", "y^2")
        assert radical_membership(x + y, J)
        K = make_ideal(ctx, "x^2")
        assert radical_membership(x, K)
        assert not radical_membership(y, K)

    def test_contencion(self, regular_plane):
        m = regular_plane.maximal_ideal()
        J = make_ideal(regular_plane, "x^2", "y")
        assert ideal_contains(m, J)
        assert not ideal_contains(J, m)
        assert m.is_maximal_ideal()
        assert not J.is_maximal_ideal()

    def test_suma_y_producto(self, regular_plane):
        ctx = regular_plane
        x, y = ctx.ring.gens()
        first = make_ideal(ctx, "x")
        second = make_ideal(ctx, "y")
        assert ideal_sum(first, second).same_as(ctx.maximal_ideal())
        product = ideal_product(first, second)
        assert ideal_membership(x * y, product)
        assert not ideal_membership(x, product)


class TestQuotientContext:
    """Tests del anillo cociente"""

    def test_dimension_y_multiplicidad(self, quadric_cone):
        data = quadric_cone.hilbert()
        assert data.dim == 3
        assert data.degree == 2

    def test_anillo_de_polinomios(self, regular_plane):
        assert regular_plane.is_polynomial_ring()
        assert regular_plane.dim == 2
        assert regular_plane.hilbert().degree == 1

    def test_cociente_no_homogeneo(self):
        with pytest.raises(NotHomogeneous):
            make_context(5, ["x", "y"], ["x^2 + y"])

    def test_describe(self, quadric_cone):
        desc = quadric_cone.describe()
        assert desc["p"] == 3
        assert desc["variables"] == ["x", "y", "z", "w"]
        assert len(desc["quotient"]) == 1

    def test_dimension_y_grado_del_cociente(self, quadric_cone, xyz_ring):
        assert hilbert_dimension_degree(quadric_cone) == (3, 2)
        assert hilbert_dimension_degree(xyz_ring) == (2, 3)

    def test_ideal_en_el_cociente(self, quadric_cone):
        """Test: (x, z) + (xy - zw) contiene a zw pero no a w"""
        ring = quadric_cone.ring
        lifted = in_quotient(make_ideal(quadric_cone, "x", "z"), quadric_cone)
        assert lifted.contains(ring.gen("z") * ring.gen("w"))
        assert lifted.contains(ring.gen("x") * ring.gen("y") - ring.gen("z") * ring.gen("w"))
        assert not lifted.contains(ring.gen("w"))

    def test_monomios_estandar(self, regular_plane_p3):
        J = make_ideal(regular_plane_p3, "x^2", "x*y", "y^3")
        found = standard_monomials(J, regular_plane_p3)
        assert [m.exponents for m in found] == [(0, 0), (0, 1), (1, 0), (0, 2)]

    def test_monomios_estandar_no_artiniano(self, regular_plane_p3):
        with pytest.raises(NotZeroDimensional):
            standard_monomials(make_ideal(regular_plane_p3, "x"), regular_plane_p3)


class TestPowers:
    """Tests de potencias ordinarias y de Frobenius"""

    def test_potencia_del_maximal(self, regular_plane):
        m = regular_plane.maximal_ideal()
        assert len(ideal_power(m, 3).generators) == 4
        assert ideal_power(m, 0).is_unit()

    def test_potencia_frobenius(self, regular_plane):
        J = make_ideal(regular_plane, "x + y")
        x, y = regular_plane.ring.gens()
        bracket = bracket_power(J, 1)
        assert bracket.generators == ((x + y) ** 5,)
        assert bracket.generators[0] == x ** 5 + y ** 5

    def test_escalera_con_presupuesto(self, regular_plane):
        cache = PowerCache(regular_plane.maximal_ideal(), max_t=3)
        assert len(cache.generators(3)) == 4
        with pytest.raises(SearchBudgetExceeded):
            cache.generators(4)

    def test_escalera_compartida_y_descartada(self, regular_plane):
        m = regular_plane.maximal_ideal()
        cache = calculus.power_cache(m)
        assert calculus.power_cache(m) is cache
        clear_power_cache()
        assert not calculus._POWER_CACHES
        assert calculus.power_cache(m) is not cache

    def test_contencion_de_potencias(self, regular_plane):
        ctx = regular_plane
        m = ctx.maximal_ideal()
        target = bracket_power(m, 1)
        assert not power_contained(m, 8, target)
        assert power_contained(m, 9, target)
        # sin atajo de Hilbert el resultado es el mismo
        assert power_contained(m, 9, target, hilbert_shortcut=False)
        assert not power_contained(m, 8, target, hilbert_shortcut=False)

    def test_generadores_minimales(self, quadric_cone):
        ctx = quadric_cone
        J = make_ideal(ctx, "x", "y", "z", "w", "x*y")
        assert minimal_generators(J, ctx) == (4, 1)
        K = make_ideal(ctx, "x*y", "z*w", "x^2")
        assert minimal_generators(K, ctx) == (2, 2)


class TestHilbert:
    """Tests de series de Hilbert de ideales monomiales"""

    def test_numeradores(self):
        assert hilbert_numerator([], 2) == (1,)
        assert hilbert_numerator([(1, 1)], 2) == (1, 0, -1)
        assert hilbert_numerator([(2, 0), (0, 2)], 2) == (1, 0, -2, 0, 1)

    def test_minimalize(self):
        assert minimalize([(1, 1), (2, 1), (0, 3)]) == [(1, 1), (0, 3)]

    def test_dimension_y_grado(self):
        assert dimension_and_degree((1, 0, -1), 2) == (1, 2)
        assert dimension_and_degree((1,), 3) == (3, 1)

    def test_h_vector_artiniano(self):
        numerator = hilbert_numerator([(2, 0), (1, 1), (0, 3)], 2)
        assert artinian_h_vector(numerator, 2) == [1, 2, 1]
        assert artinian_h_vector(hilbert_numerator([(1, 1)], 2), 2) is None

    def test_funcion_de_hilbert(self):
        numerator = hilbert_numerator([(5, 0), (0, 5)], 2)
        assert hilbert_function_value(numerator, 2, 8) == 1
        assert hilbert_function_value(numerator, 2, 9) == 0
        assert hilbert_function_value(numerator, 2, -1) == 0


class TestDenseAlgebra:
    """Tests del álgebra lineal densa módulo p"""

    def test_rango(self):
        matrix = np.array([[1, 2], [2, 4]])
        assert rank_mod_p(matrix, 5) == 1
        assert rank_mod_p(np.array([[1, 2], [3, 4]]), 2) == 1
        assert rank_mod_p(np.array([[1, 2], [3, 4]]), 5) == 2

    def test_caja(self):
        assert box_size(2, 5, 8) == 1
        assert box_size(2, 5, 4) == 5
        assert sum(box_size(3, 3, d) for d in range(7)) == 27

    def test_pertenencia_densa(self, regular_plane):
        x, y = regular_plane.ring.gens()
        assert dense_contains([x ** 2, y], x ** 2 * y + y ** 3)
        assert not dense_contains([x ** 2, y], x)

    def test_colongitud_en_caja(self, quadric_cone):
        """(m^[3] : 1) = m^[3] tiene colongitud 3^4"""
        ring = quadric_cone.ring
        assert box_colon_rank(ring, 3, [ring.one()]) == 81
