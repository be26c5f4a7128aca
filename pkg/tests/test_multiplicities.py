"""
Tests de colongitudes, Hilbert-Kunz, F-signatura y a-invariantes
"""
import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Agregar path del proyecto
sys.path.insert(0, str(Path(__file__).parent.parent))

from algebra.calculus import bracket_power
from algebra.ideals import Ideal
from core.errors import NotCompleteIntersection, NotFPure, NotSystemOfParameters, NotZeroDimensional
from finvariants.multiplicities import (
    a0_socle_degree,
    a_top_complete_intersection,
    check_system_of_parameters,
    colength,
    f_signature_sequence,
    h_vector,
    hilbert_kunz_sequence,
    hilbert_samuel_multiplicity,
)
from tests.conftest import make_context, make_ideal


@pytest.fixture
def quadric_sop(quadric_cone):
    return make_ideal(quadric_cone, "x", "y", "z + w")


class TestColength:
    """Tests de λ(R/J) y a_0"""

    def test_ideal_monomial(self, regular_plane_p3):
        J = make_ideal(regular_plane_p3, "x^2", "x*y", "y^3")
        assert h_vector(J, regular_plane_p3) == [1, 2, 1]
        assert colength(J, regular_plane_p3) == 4
        assert a0_socle_degree(J, regular_plane_p3) == 2

    def test_frobenius_del_maximal(self):
        ctx = make_context(2, ["x", "y"])
        assert colength(bracket_power(ctx.maximal_ideal(), 1), ctx) == 4

    def test_potencias_de_frobenius_en_anillo_regular(self):
        """Test: λ(S/m^[q]) = q^n"""
        for p, n in ((2, 3), (3, 2), (3, 3)):
            ctx = make_context(p, [f"x{i}" for i in range(n)])
            m = ctx.maximal_ideal()
            for e in (1, 2):
                assert colength(bracket_power(m, e), ctx) == p ** (e * n)

    def test_ideal_unidad(self, regular_plane):
        unit = Ideal.unit(regular_plane.ring)
        assert colength(unit, regular_plane) == 0
        with pytest.raises(NotZeroDimensional):
            a0_socle_degree(unit, regular_plane)

    def test_no_artiniano(self, regular_plane):
        with pytest.raises(NotZeroDimensional):
            colength(make_ideal(regular_plane, "x"), regular_plane)

    def test_colongitud_del_sistema_de_parametros(self, quadric_cone, quadric_sop):
        assert colength(quadric_sop, quadric_cone) == 2
        assert a0_socle_degree(quadric_cone.maximal_ideal(), quadric_cone) == 0


class TestHilbertKunz:
    """Tests de la sucesión de Hilbert-Kunz"""

    def test_plano_sobre_f2(self):
        ctx = make_context(2, ["x", "y"])
        sequence = hilbert_kunz_sequence(ctx.maximal_ideal(), 2, ctx)
        assert sequence.d == 2
        assert [r["colength"] for r in sequence.rows] == [4, 16]
        assert sequence.ratios() == [1, 1]
        assert sequence.to_dict()["rows"][1] == {"e": 2, "colength": 16, "ratio": "1/1"}

    def test_cono_cuadrico(self, quadric_cone, quadric_sop):
        """Test: R Cohen-Macaulay, λ(R/J^[q]) = q^d λ(R/J) para un sistema de parámetros"""
        sequence = hilbert_kunz_sequence(quadric_sop, 1, quadric_cone)
        assert sequence.rows[0]["colength"] == 54
        assert sequence.ratios() == [Fraction(2)]

    def test_requiere_m_primario(self, regular_plane):
        with pytest.raises(NotZeroDimensional):
            hilbert_kunz_sequence(make_ideal(regular_plane, "x"), 1, regular_plane)


class TestMultiplicity:
    """Tests de e(R) y a_d(R)"""

    def test_multiplicidad(self, regular_plane, quadric_cone, xyz_ring):
        assert hilbert_samuel_multiplicity(regular_plane) == 1
        assert hilbert_samuel_multiplicity(quadric_cone) == 2
        assert hilbert_samuel_multiplicity(xyz_ring) == 3

    def test_a_top(self, regular_plane, quadric_cone, xyz_ring):
        assert a_top_complete_intersection(regular_plane) == -2
        assert a_top_complete_intersection(quadric_cone) == -2
        assert a_top_complete_intersection(xyz_ring) == 0

    def test_no_interseccion_completa(self):
        """Test: la cúbica torcida no es intersección completa"""
        ctx = make_context(3, ["x", "y", "z", "w"], ["x*z - y^2", "y*w - z^2", "x*w - y*z"])
        with pytest.raises(NotCompleteIntersection):
            a_top_complete_intersection(ctx)


class TestFSignature:
    """Tests de las estimaciones de la F-signatura"""

    def test_anillo_regular(self, regular_plane):
        estimate = f_signature_sequence(2, regular_plane)
        assert estimate.values() == [1, 1]
        assert estimate.lower_bound_target == Fraction(1, 2)

    def test_cono_cuadrico_directo(self, quadric_cone):
        estimate = f_signature_sequence(1, quadric_cone, "direct")
        s = estimate.values()[0]
        assert Fraction(1, 3) <= s <= 1, f"s_1 = {s} fuera de [1/3, 1]"
        assert estimate.to_dict()["lower_bound_target"] == "1/3"

    def test_cono_cuadrico_gorenstein(self, quadric_cone, quadric_sop):
        estimate = f_signature_sequence(2, quadric_cone, "gorenstein", quadric_sop)
        rows = estimate.rows
        assert [r["colength_J"] for r in rows] == [54, 1458]
        for row in rows:
            assert row["s"] >= Fraction(1, 3), f"s_{row['e']} = {row['s']} < e(R)/d!"
            assert row["s"] >= row["floor"]
        assert rows[0]["floor"] == 0
        data = estimate.to_dict()
        assert data["method"] == "gorenstein"
        assert "e_HK(J) - e_HK(a)" in data["footnote"]

    def test_gorenstein_sin_sistema(self, quadric_cone):
        with pytest.raises(NotSystemOfParameters):
            f_signature_sequence(1, quadric_cone, "gorenstein")

    def test_metodo_desconocido(self, quadric_cone):
        with pytest.raises(ValueError):
            f_signature_sequence(1, quadric_cone, "otro")

    def test_no_f_puro(self, fermat_char2):
        with pytest.raises(NotFPure):
            f_signature_sequence(1, fermat_char2)


class TestSystemOfParameters:
    """Tests de la validación del sistema de parámetros"""

    def test_valido(self, quadric_cone, quadric_sop):
        check_system_of_parameters(quadric_sop, quadric_cone)

    def test_cantidad_incorrecta(self, quadric_cone):
        with pytest.raises(NotSystemOfParameters):
            check_system_of_parameters(make_ideal(quadric_cone, "x", "y"), quadric_cone)

    def test_no_m_primario(self, quadric_cone):
        with pytest.raises(NotSystemOfParameters):
            check_system_of_parameters(make_ideal(quadric_cone, "x", "y", "z"), quadric_cone)
