import pytest
from hypothesis import given, settings, strategies as st

from src.differential.operators import (ThetaAb, ThetaOrder, ThetaWord, apply_ab, apply_theta,
                                        leibniz_expand, multi_indices_up_to, theta_binomial,
                                        theta_compare, words_up_to)
from src.algebra.fields import QQ
from src.algebra.polynomial import PolyRing
from src.differential.ring import DerivationSpec, DiffRing
from src.utils.data_generator import InstanceGenerator
from src.utils.errors import NonCommutingError
from tests.helpers import poly


@pytest.fixture
def skew():
    ring = PolyRing(QQ, ["x", "y"])
    return DiffRing(ring, [DerivationSpec("d1", {"x": ring.gen("y")}),
                           DerivationSpec("d2", {"x": ring.gen("x")})])


def test_apply_words(line, skew):
    assert apply_theta(poly(line, "x^2"), ThetaWord((0, 0)), line) == 2
    x = skew.gen("x")
    assert apply_theta(x, ThetaWord((0, 1)), skew) == skew.gen("y")
    assert apply_theta(x, ThetaWord((1, 0)), skew).is_zero()
    assert apply_theta(x, ThetaWord(), skew) == x


def test_multi_indices_need_commuting_derivations(skew):
    with pytest.raises(NonCommutingError):
        apply_ab(skew.gen("x"), ThetaAb((1, 1)), skew)
    with pytest.raises(NonCommutingError):
        leibniz_expand(skew.gen("x"), skew.gen("y"), ThetaAb((1, 0)), skew)


def test_generalized_binomials():
    assert theta_binomial(ThetaAb((2, 1)), ThetaAb((1, 0))) == 2
    assert theta_binomial(ThetaAb((2, 1)), ThetaAb((2, 1))) == 1
    assert theta_binomial(ThetaAb((1, 0)), ThetaAb((0, 1))) == 0


def test_orders():
    d1, d2 = ThetaAb((1, 0)), ThetaAb((0, 1))
    assert theta_compare(d2, ThetaAb((2, 0)), ThetaOrder.KEIGHER) == -1
    assert theta_compare(d1, d2, ThetaOrder.LEX) == 1
    for order in ThetaOrder:
        for theta in multi_indices_up_to(2, 3):
            assert theta_compare(theta, theta * d1, order) == -1
            assert theta_compare(theta, theta, order) == 0


def test_binomial_pascal_rule():
    thetas = multi_indices_up_to(3, 3)
    for i in range(3):
        d = ThetaAb.single(i, 3)
        for theta in thetas:
            for sub in thetas:
                assert theta_binomial(theta * d, sub * d) == \
                    theta_binomial(theta, sub) + theta_binomial(theta, sub * d)


@pytest.mark.parametrize("order", list(ThetaOrder))
def test_order_is_total_and_antisymmetric(order):
    thetas = multi_indices_up_to(3, 3)
    for a in thetas:
        for b in thetas:
            c = theta_compare(a, b, order)
            assert c in (-1, 0, 1)
            assert c == -theta_compare(b, a, order)
            assert (c == 0) == (a == b)


@pytest.mark.parametrize("order", list(ThetaOrder))
def test_order_is_transitive(order):
    thetas = multi_indices_up_to(3, 3)
    for a in thetas:
        for b in thetas:
            if theta_compare(a, b, order) != -1:
                continue
            for c in thetas:
                if theta_compare(b, c, order) == -1:
                    assert theta_compare(a, c, order) == -1


@pytest.mark.parametrize("order", list(ThetaOrder))
def test_order_respects_products(order):
    thetas = multi_indices_up_to(3, 2)
    for a in thetas:
        for b in thetas:
            c = theta_compare(a, b, order)
            for m in thetas:
                assert theta_compare(a * m, b * m, order) == c


def test_word_enumeration_counts():
    assert sum(1 for _ in words_up_to(2, 3)) == 1 + 2 + 4 + 8
    assert len(multi_indices_up_to(2, 2)) == 6


def test_leibniz_examples(line, radial, plane):
    x = line.gen("x")
    assert leibniz_expand(x, x, ThetaAb((2,)), line) == 2
    xr = radial.gen("x")
    assert leibniz_expand(xr, xr, ThetaAb((2,)), radial) == poly(radial, "4*x^2")
    assert leibniz_expand(plane.gen("x"), plane.gen("y"), ThetaAb((1, 1)), plane) == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_leibniz_matches_direct_application(seed):
    gen = InstanceGenerator(seed)
    ring = PolyRing(QQ, ["x", "y"])
    R = DiffRing(ring, [DerivationSpec("d1", {"x": ring.one()}),
                        DerivationSpec("d2", {"y": ring.gen("y")})])
    f = gen.poly(ring, max_degree=3, max_terms=3)
    g = gen.poly(ring, max_degree=3, max_terms=3)
    theta = gen.theta_ab(2, 3)
    assert leibniz_expand(f, g, theta, R) == apply_ab(f * g, theta, R)
