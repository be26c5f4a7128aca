"""
Configuración compartida de pytest: opción --slow y anillos de prueba
"""
import sys
from pathlib import Path

import pytest

# Agregar path del proyecto
sys.path.insert(0, str(Path(__file__).parent.parent))

from algebra.ideals import Ideal, QuotientContext
from problems.parser import parse_polynomial

DATA_DIR = Path(__file__).parent.parent / "data"


def pytest_addoption(parser):
    parser.addoption(
        "--slow",
        action="store_true",
        default=False,
        help="Ejecutar tests lentos (hipersuperficie diagonal en 8 variables)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip_slow = pytest.mark.skip(reason="requiere --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def make_context(p, variables, quotient=()):
    """Contexto R = F_p[variables]/(quotient) a partir de texto"""
    ctx = QuotientContext.create(p, variables)
    gens = [parse_polynomial(text, ctx.ring) for text in quotient]
    return QuotientContext(ctx.ring, Ideal(ctx.ring, gens))


def make_ideal(ctx, *texts):
    return Ideal(ctx.ring, [parse_polynomial(text, ctx.ring) for text in texts])


@pytest.fixture
def regular_plane():
    """F_5[x, y]"""
    return make_context(5, ["x", "y"])


@pytest.fixture
def regular_plane_p3():
    """F_3[x, y]"""
    return make_context(3, ["x", "y"])


@pytest.fixture
def quadric_cone():
    """F_3[x, y, z, w]/(xy - zw)"""
    return make_context(3, ["x", "y", "z", "w"], ["x*y - z*w"])


@pytest.fixture
def fermat_char2():
    """F_2[x, y]/(x^2 + y^2), no F-puro"""
    return make_context(2, ["x", "y"], ["x^2 + y^2"])


@pytest.fixture
def xyz_ring():
    """F_5[x, y, z]/(xyz)"""
    return make_context(5, ["x", "y", "z"], ["x*y*z"])


@pytest.fixture
def diagonal_ring():
    """F_7[x1..x8]/(x1^2 + ... + x8^2)"""
    names = [f"x{i}" for i in range(1, 9)]
    return make_context(7, names, [" + ".join(f"{v}^2" for v in names)])


@pytest.fixture
def data_dir():
    return DATA_DIR
