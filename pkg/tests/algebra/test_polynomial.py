from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from src.algebra.fields import QQ, PrimeField, field_from_json
from src.algebra.orders import DEGREVLEX
from src.algebra.polynomial import PolyRing, format_poly, substitute
from src.utils.config import limits_override
from src.utils.errors import CharacteristicError, ResourceCapError, RingMismatchError
from tests.helpers import poly

coefficients = st.fractions(min_value=-20, max_value=20, max_denominator=6)


def test_arithmetic_and_canonical_text(qxy):
    x, y = qxy.gen("x"), qxy.gen("y")
    assert format_poly((x + y) ** 2) == "x^2 + 2*x*y + y^2"
    assert format_poly(x * y - y * x) == "0"
    assert format_poly(x.scale(Fraction(3, 2)) - 1) == "3/2*x - 1"


def test_coefficients_reduce_mod_p(f5xy):
    x = f5xy.gen("x")
    assert (x.scale(5)).is_zero()
    assert x.scale(7) == x.scale(2)


def test_degrevlex_sorting(qxy):
    f = poly(qxy, "y^2 + x^2 + x*y + x + 1")
    monos = [m for m, _ in f.sorted_terms(DEGREVLEX)]
    assert monos == [(2, 0), (1, 1), (0, 2), (1, 0), (0, 0)]


def test_substitute_variable(qxy):
    f = poly(qxy, "x^2*y + y")
    assert substitute(f, "x", 2) == poly(qxy, "5*y")


def test_mixing_rings_is_rejected(qxy, f5xy):
    with pytest.raises(RingMismatchError):
        qxy.gen("x") + f5xy.gen("x")


def test_degree_cap_raises_resource_error(qxy):
    x = qxy.gen("x")
    with limits_override(max_degree=5):
        with pytest.raises(ResourceCapError) as info:
            x ** 6
    assert info.value.exit_code == 3


def test_field_descriptions():
    assert field_from_json({"type": "Q"}) == QQ
    assert field_from_json({"type": "Fp", "p": 7}) == PrimeField(7)
    with pytest.raises(CharacteristicError):
        PrimeField(6)


@given(coefficients, coefficients, coefficients)
def test_ring_axioms_on_linear_forms(a, b, c):
    ring = PolyRing(QQ, ["x", "y"])
    x, y = ring.gen("x"), ring.gen("y")
    f = x.scale(a) + b
    g = y.scale(b) + c
    h = x * y + a
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f


@given(st.integers(min_value=0, max_value=6), st.data())
def test_binomial_expansion_coefficients(n, data):
    k = data.draw(st.integers(min_value=0, max_value=n))
    ring = PolyRing(QQ, ["x", "y"])
    f = (ring.gen("x") + ring.gen("y")) ** n
    assert f.coefficient((k, n - k)) == comb(n, k)
