"""Anéis compartilhados pelos testes"""

import pytest

from src.algebra.fields import QQ, PrimeField
from src.algebra.polynomial import PolyRing
from src.protocols.ring_spec import builtin_ring
from src.tensor.tensor_ring import TensorRing
from src.utils.logger import LogLevel, configure_logger


@pytest.fixture(autouse=True, scope="session")
def quiet_logger():
    configure_logger(console_level=LogLevel.ERROR)


@pytest.fixture
def qxy():
    return PolyRing(QQ, ["x", "y"])


@pytest.fixture
def f5xy():
    return PolyRing(PrimeField(5), ["x", "y"])


@pytest.fixture
def line():
    return builtin_ring("line")


@pytest.fixture
def radial():
    return builtin_ring("radial")


@pytest.fixture
def zero_ring():
    return builtin_ring("zero")


@pytest.fixture
def plane():
    return builtin_ring("plane")


@pytest.fixture
def euler():
    return builtin_ring("euler")


@pytest.fixture
def charp_line():
    return builtin_ring("charp-line")


@pytest.fixture
def nilsquare():
    return builtin_ring("nilsquare")


@pytest.fixture
def dual_q():
    return builtin_ring("dual-q")


@pytest.fixture
def dual_f2():
    return builtin_ring("dual-f2")


@pytest.fixture
def tensor():
    """A ⊗ Q[t] com A = Q[u, v]"""
    return TensorRing(builtin_ring("uv").ring)
