"""
Tests de sucesiones nu y umbrales F

Valores de referencia:
- F_5[x,y]: nu_m^m(5) = 8, nu_m^m(25) = 48, c^m(m) = 2
- F_3[x,y,z,w]/(xy - zw): nu_m^m(3) = 4, nu_m^m(9) = 16
"""
import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Agregar path del proyecto
sys.path.insert(0, str(Path(__file__).parent.parent))

from algebra.calculus import bracket_power
from algebra.dense import dense_nu
from algebra.ideals import Ideal
from config.engine import EngineConfig
from core.errors import EmptyIdeal, NotHomogeneous, NotInRadical, SearchBudgetExceeded, UnitIdeal
from finvariants.thresholds import (
    NuRecord,
    f_threshold,
    map_levels,
    nu,
    regularity_bound,
    verify_nu_record,
)
from tests.conftest import make_context, make_ideal


class TestNu:
    """Tests de nu_a^J(p^e)"""

    def test_plano_regular(self, regular_plane):
        m = regular_plane.maximal_ideal()
        assert nu(m, m, 1, regular_plane).nu == 8
        record = nu(m, m, 2, regular_plane)
        assert record.nu == 48
        assert record.ratio == Fraction(48, 25)

    def test_nivel_cero(self, regular_plane):
        m = regular_plane.maximal_ideal()
        assert nu(m, m, 0, regular_plane) == NuRecord(0, 0, Fraction(0))

    def test_cono_cuadrico(self, quadric_cone):
        m = quadric_cone.maximal_ideal()
        assert nu(m, m, 1, quadric_cone).nu == 4
        assert nu(m, m, 2, quadric_cone).nu == 16

    def test_xyz(self, xyz_ring):
        m = xyz_ring.maximal_ideal()
        assert nu(m, m, 1, xyz_ring).nu == 8

    def test_sin_atajo_de_hilbert(self, regular_plane):
        """Test: el barrido generador a generador da el mismo valor"""
        m = regular_plane.maximal_ideal()
        config = EngineConfig(hilbert_shortcut=False)
        assert nu(m, m, 1, regular_plane, config).nu == 8

    @pytest.mark.parametrize("ring_name, a_texts, J_texts, expected", [
        ("regular_plane_p3", ("x^2", "y^2"), ("x^2", "x*y", "y^3"), 5),
        ("fermat_char2", ("x", "y"), ("x", "y"), 2),
    ])
    def test_coincide_con_oraculo_denso(self, request, ring_name, a_texts, J_texts, expected):
        """Test: la búsqueda binaria coincide con el barrido denso sobre J^[p] + I"""
        ctx = request.getfixturevalue(ring_name)
        a = make_ideal(ctx, *a_texts)
        J = make_ideal(ctx, *J_texts)
        record = nu(a, J, 1, ctx)
        target = ctx.lift(bracket_power(J, 1))
        assert dense_nu(list(a.generators), list(target.generators), 20) == expected
        assert record.nu == expected
        assert verify_nu_record(a, J, record, ctx)

    def test_verificacion_de_registro(self, regular_plane):
        m = regular_plane.maximal_ideal()
        assert verify_nu_record(m, m, NuRecord(1, 8, Fraction(8, 5)), regular_plane)
        assert not verify_nu_record(m, m, NuRecord(1, 7, Fraction(7, 5)), regular_plane)


class TestNuErrors:
    """Tests de hipótesis inválidas"""

    def test_ideal_cero(self, regular_plane):
        m = regular_plane.maximal_ideal()
        with pytest.raises(EmptyIdeal):
            nu(Ideal.zero(regular_plane.ring), m, 1, regular_plane)

    def test_no_homogeneo(self, regular_plane):
        m = regular_plane.maximal_ideal()
        with pytest.raises(NotHomogeneous):
            nu(make_ideal(regular_plane, "x + y^2"), m, 1, regular_plane)

    def test_ideal_unidad(self, regular_plane):
        m = regular_plane.maximal_ideal()
        with pytest.raises(UnitIdeal):
            nu(Ideal.unit(regular_plane.ring), m, 1, regular_plane)

    def test_fuera_del_radical(self, regular_plane):
        m = regular_plane.maximal_ideal()
        with pytest.raises(NotInRadical):
            nu(m, make_ideal(regular_plane, "x"), 1, regular_plane)

    def test_presupuesto_de_potencias(self, regular_plane):
        m = regular_plane.maximal_ideal()
        config = EngineConfig(max_power=3, hilbert_shortcut=False)
        with pytest.raises(SearchBudgetExceeded):
            nu(m, m, 1, regular_plane, config)

    def test_e_negativo(self, regular_plane):
        m = regular_plane.maximal_ideal()
        with pytest.raises(ValueError):
            nu(m, m, -1, regular_plane)


class TestFThreshold:
    """Tests del intervalo certificado de c^J(a)"""

    def test_plano_regular(self, regular_plane):
        m = regular_plane.maximal_ideal()
        estimate = f_threshold(m, m, 2, regular_plane)
        assert estimate.lower == Fraction(48, 25)
        assert estimate.upper == 2
        assert estimate.lower_certified and estimate.upper_certified
        assert estimate.contains(2)
        assert [r.nu for r in estimate.records] == [8, 48]

    def test_cono_cuadrico_contiene_dos(self, quadric_cone):
        m = quadric_cone.maximal_ideal()
        estimate = f_threshold(m, m, 2, quadric_cone)
        assert estimate.contains(2)
        assert estimate.width <= Fraction(4, 9)
        assert estimate.interval() == (Fraction(16, 9), Fraction(20, 9))

    def test_no_f_puro_cota_heuristica(self, fermat_char2):
        m = fermat_char2.maximal_ideal()
        estimate = f_threshold(m, m, 1, fermat_char2)
        assert not estimate.lower_certified
        assert estimate.upper_certified
        assert estimate.notes

    def test_serializacion(self, regular_plane):
        m = regular_plane.maximal_ideal()
        data = f_threshold(m, m, 2, regular_plane).to_dict()
        assert data["interval"] == ["48/25", "2/1"]
        assert data["width"] == "2/25"
        assert data["records"][0] == {"e": 1, "nu": 8, "ratio": "8/5"}
        assert data["candidates"][1]["bound"] == "2/1"

    def test_workers_no_cambian_el_resultado(self, regular_plane):
        m = regular_plane.maximal_ideal()
        serial = f_threshold(m, m, 2, regular_plane, EngineConfig(workers=1))
        parallel = f_threshold(m, m, 2, regular_plane, EngineConfig(workers=2))
        assert serial.to_dict() == parallel.to_dict()

    def test_e_max_invalido(self, regular_plane):
        m = regular_plane.maximal_ideal()
        with pytest.raises(ValueError):
            f_threshold(m, m, 0, regular_plane)


class TestHelpers:
    """Tests de utilidades por nivel"""

    def test_map_levels_ordenado(self):
        assert map_levels(lambda e: e * e, range(1, 6), workers=3) == [1, 4, 9, 16, 25]
        assert map_levels(lambda e: e, [], workers=2) == []

    def test_cota_de_regularidad(self, regular_plane):
        """Test: D * (c^m(m) + 1) = 2 * 3 en F_5[x,y] con e_max = 1"""
        m = regular_plane.maximal_ideal()
        assert regularity_bound(m, 1, regular_plane) == 6

    def test_cota_de_regularidad_ideal_mixto(self):
        ctx = make_context(3, ["x", "y"])
        J = make_ideal(ctx, "x", "y^2")
        assert regularity_bound(J, 1, ctx) > 0
