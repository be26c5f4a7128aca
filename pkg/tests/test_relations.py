"""
Tests del verificador de relaciones entre invariantes
"""
import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Agregar path del proyecto
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.errors import NotCompleteIntersection, NotFPure
from finvariants.purity import b_invariant, clear_splitting_cache, fedder_is_f_pure
from finvariants.relations import (
    INCONCLUSIVE,
    VERIFIED,
    VIOLATED,
    InvariantReport,
    diagonal_criterion,
    diagonal_exponent,
    verify_relations,
)
from finvariants.thresholds import f_threshold, nu
from finvariants.multiplicities import a_top_complete_intersection, hilbert_samuel_multiplicity
from tests.conftest import make_context


@pytest.fixture(autouse=True)
def fresh_splitting_cache():
    clear_splitting_cache()
    yield


class TestDiagonal:
    """Tests de la detección de hipersuperficies diagonales"""

    def test_exponente(self, diagonal_ring, quadric_cone, xyz_ring):
        assert diagonal_exponent(diagonal_ring) == 2
        assert diagonal_exponent(quadric_cone) is None
        assert diagonal_exponent(xyz_ring) is None
        fermat = make_context(5, ["x", "y", "z"], ["2*x^3 + 2*y^3 + 2*z^3"])
        assert diagonal_exponent(fermat) == 3

    def test_criterio(self):
        assert diagonal_criterion(7, 8, 2)
        assert not diagonal_criterion(5, 3, 3)
        assert not diagonal_criterion(7, 3, 2)


class TestVerifyRelations:
    """Tests del reporte completo"""

    def test_cono_cuadrico(self, quadric_cone):
        report = verify_relations(quadric_cone, 1)
        assert not report.has_violation
        assert report.values["a_top"] == -2
        assert report.values["a_top_source"] == "complete_intersection"
        assert report.values["multiplicity"] == 2
        assert report.values["dim"] == 3
        assert report.relation("fpt_le_neg_a_le_cm").verdict == VERIFIED
        nu_formula = report.relation("nu_formula")
        assert nu_formula.verdict == VERIFIED
        assert nu_formula.evidence["rows"] == [{"e": 1, "nu": 4, "predicted": 4}]
        assert report.relation("a0_identity").verdict == VERIFIED
        assert report.relation("socle_frobenius_lower_bound").verdict == VERIFIED
        assert report.relation("signature_bound").verdict == VERIFIED
        assert report.relation("bracket_chain") is None
        assert report.relation("diagonal_prediction") is None
        assert report.values["regbound"] is not None

    def test_cono_cuadrico_gorenstein(self, quadric_cone):
        from tests.conftest import make_ideal

        sop = make_ideal(quadric_cone, "x", "y", "z + w")
        report = verify_relations(quadric_cone, 1, J_sop=sop)
        signature = report.relation("signature_bound")
        assert signature.verdict == VERIFIED
        assert signature.evidence["method"] == "gorenstein"
        assert signature.evidence["target"] == "1/3"

    def test_plano_regular_dos_niveles(self, regular_plane):
        report = verify_relations(regular_plane, 2)
        assert not report.has_violation
        assert report.relation("bracket_chain").verdict == VERIFIED
        assert report.relation("nu_growth_bound").verdict == VERIFIED
        assert report.relation("f_pure_monotonicity").evidence["nu"] == [8, 48]
        assert report.values["regbound"] == "6/1"

    def test_a_top_declarado(self, regular_plane):
        report = verify_relations(regular_plane, 1, a_top=-2)
        assert report.values["a_top_source"] == "user-asserted"
        assert report.relation("fpt_le_neg_a_le_cm").verdict == VERIFIED

    def test_a_top_declarado_incompatible(self, regular_plane):
        """Test: un a_d falso que cae fuera de los intervalos se detecta"""
        report = verify_relations(regular_plane, 1, a_top=-5)
        assert report.relation("fpt_le_neg_a_le_cm").verdict == VIOLATED
        assert report.relation("nu_formula").verdict == INCONCLUSIVE
        assert report.has_violation

    def test_no_f_puro(self, fermat_char2):
        with pytest.raises(NotFPure):
            verify_relations(fermat_char2, 1)

    def test_no_interseccion_completa_sin_a_top(self):
        ctx = make_context(3, ["x", "y", "z", "w"], ["x*z - y^2", "y*w - z^2", "x*w - y*z"])
        with pytest.raises(NotCompleteIntersection):
            verify_relations(ctx, 1)

    def test_serializacion(self, quadric_cone):
        data = verify_relations(quadric_cone, 1).to_dict()
        assert data["context"]["p"] == 3
        names = [r["name"] for r in data["relations"]]
        assert names[0] == "fpt_le_neg_a_le_cm"
        assert all(r["verdict"] in (VERIFIED, VIOLATED, INCONCLUSIVE) for r in data["relations"])

    def test_reporte_vacio(self):
        report = InvariantReport(context={})
        assert not report.has_violation
        report.add("demo", VIOLATED, detalle=1)
        assert report.has_violation
        assert report.relation("demo").evidence == {"detalle": 1}


@pytest.mark.slow
class TestDiagonalHypersurface:
    """F_7[x_1..x_8]/(x_1^2 + ... + x_8^2): c^m(m) = n - b = 6"""

    def test_invariantes_basicos(self, diagonal_ring):
        assert fedder_is_f_pure(diagonal_ring)
        assert a_top_complete_intersection(diagonal_ring) == -6
        assert hilbert_samuel_multiplicity(diagonal_ring) == 2

    def test_nu_y_umbral(self, diagonal_ring):
        m = diagonal_ring.maximal_ideal()
        assert nu(m, m, 1, diagonal_ring).nu == 36
        estimate = f_threshold(m, m, 1, diagonal_ring)
        assert estimate.interval() == (Fraction(36, 7), Fraction(44, 7))
        assert estimate.contains(6)

    def test_b_del_maximal(self, diagonal_ring):
        b = b_invariant(diagonal_ring.maximal_ideal(), 1, diagonal_ring)
        assert 34 <= b <= 42

    def test_prediccion_diagonal(self, diagonal_ring):
        report = verify_relations(diagonal_ring, 1)
        assert report.relation("diagonal_prediction").verdict == VERIFIED
        assert not report.has_violation
