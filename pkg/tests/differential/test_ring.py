from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.algebra.fields import QQ
from src.algebra.polynomial import PolyRing
from src.differential.constants import (check_constant_fraction, constants_are_exact,
                                        constants_truncated)
from src.differential.ring import DerivationSpec, DiffRing, check_commuting, derive, graded_stable, localize
from src.utils.errors import IllDefinedDerivationError, RingMismatchError, ZeroDivisorArgumentError
from tests.helpers import poly


@pytest.fixture
def skew():
    """Q[x, y] com ∂1: x ↦ y e ∂2: x ↦ x (não comutam)"""
    ring = PolyRing(QQ, ["x", "y"])
    return DiffRing(ring, [DerivationSpec("d1", {"x": ring.gen("y")}),
                           DerivationSpec("d2", {"x": ring.gen("x")})])


def test_derive_examples(line, radial, skew):
    assert derive(poly(line, "x^3"), 0, line) == poly(line, "3*x^2")
    assert derive(poly(radial, "x^3"), 0, radial) == poly(radial, "3*x^3")
    assert derive(poly(skew, "x*y"), 0, skew) == poly(skew, "y^2")


def test_commuting_check(line, plane, skew):
    assert check_commuting(line)
    assert check_commuting(plane)
    assert not check_commuting(skew)
    assert skew.commuting is False


def test_quotient_must_be_stable():
    ring = PolyRing(QQ, ["x"])
    with pytest.raises(IllDefinedDerivationError):
        DiffRing(ring, [DerivationSpec("d", {"x": ring.one()})], [ring.gen("x") ** 2])


def test_derivation_image_in_other_ring_is_rejected():
    ring = PolyRing(QQ, ["x"])
    other = PolyRing(QQ, ["x", "y"])
    with pytest.raises(RingMismatchError):
        DiffRing(ring, [DerivationSpec("d", {"x": other.gen("y")})])


def test_derivation_reduces_modulo_quotient(dual_q):
    x = dual_q.gen("x")
    assert dual_q.derive(x * x, 0).is_zero()
    assert dual_q.derive(x, 0) == dual_q.gen("y")


def test_graded_stability(line, radial, euler):
    assert graded_stable(line) and graded_stable(radial) and graded_stable(euler)
    ring = PolyRing(QQ, ["x"])
    assert not graded_stable(DiffRing(ring, [DerivationSpec("d", {"x": ring.gen("x") ** 2})]))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3),
       st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_leibniz_rule_on_radial_line(a, b):
    ring = PolyRing(QQ, ["x"])
    R = DiffRing(ring, [DerivationSpec("d", {"x": ring.gen("x")})])
    x = R.gen("x")
    f = sum((x ** k).scale(c) for k, c in enumerate(a)) + R.ring.zero()
    g = sum((x ** k).scale(c) for k, c in enumerate(b)) + R.ring.zero()
    assert R.derive(f * g, 0) == R.derive(f, 0) * g + f * R.derive(g, 0)


def test_constants_examples(line, radial, zero_ring):
    assert constants_truncated(radial, 3) == [radial.ring.one()]
    assert constants_truncated(line, 5) == [line.ring.one()]
    assert len(constants_truncated(zero_ring, 2)) == 3
    assert constants_are_exact(line)


def test_constant_fractions(radial):
    assert check_constant_fraction(poly(radial, "3*x^2"), poly(radial, "x^2"), radial).value == 3
    assert not check_constant_fraction(poly(radial, "x + 1"), radial.gen("x"), radial).constant
    assert check_constant_fraction(poly(radial, "x^3"), poly(radial, "2*x^3"), radial).value == Fraction(1, 2)
    with pytest.raises(ZeroDivisorArgumentError):
        check_constant_fraction(radial.gen("x"), radial.ring.zero(), radial)


def test_localization(radial, line):
    loc = localize(radial, radial.gen("x"))
    y = loc.ring.variables[-1]
    assert loc.derive(loc.gen(y), 0) == -loc.gen(y)
    unit = localize(line, line.ring.one())
    assert len(constants_truncated(unit, 3)) == 1
    with pytest.raises(ZeroDivisorArgumentError):
        localize(line, line.ring.zero())


def test_nilpotent_localization_is_rejected(dual_q):
    with pytest.raises(ZeroDivisorArgumentError):
        localize(dual_q, dual_q.gen("x"))
