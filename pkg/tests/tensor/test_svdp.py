import pytest

from src.algebra.ideal import Ideal, ideal_equal, ideal_member
from src.differential.dideal import PsharpStatus, delta_close
from src.tensor.svdp import (contract_ideal, extend_ideal, fiber_j, fiber_j_ideal, fiber_pullback,
                             fiber_pullback_sharp, recompose, svdp_reduce)
from src.utils.errors import NotInIdealError, RingMismatchError, UncertifiedInputError
from tests.helpers import ideal, poly


def test_extension(tensor):
    ext = extend_ideal(ideal(tensor.base, "u"), tensor)
    assert ideal_member(poly(tensor.ring, "u*t"), ext)
    assert ext.delta_bound == 0
    assert extend_ideal(Ideal(tensor.base), tensor).is_zero()
    assert extend_ideal(ideal(tensor.base, "1"), tensor).is_unit()
    with pytest.raises(RingMismatchError):
        extend_ideal(ideal(tensor.ring, "u"), tensor)


def test_contraction(tensor):
    J = delta_close(ideal(tensor.realization, "u*t"), tensor.realization, 2).result
    assert ideal_equal(contract_ideal(J, tensor), ideal(tensor.base, "u"))
    assert contract_ideal(Ideal(tensor.ring), tensor).is_zero()
    ext = extend_ideal(ideal(tensor.base, "u^2 - v"), tensor)
    assert ideal_equal(contract_ideal(ext, tensor), ideal(tensor.base, "u^2 - v"))


def test_reduce_single_pure_tensor(tensor):
    x = tensor.from_poly(poly(tensor.ring, "u*t"))
    J = extend_ideal(ideal(tensor.base, "u"), tensor)
    assert svdp_reduce(x, J) == [(tensor.base.gen("u"), tensor.K.gen("t"))]
    assert svdp_reduce(tensor.zero(), J) == []


def test_reduce_separates_two_terms(tensor):
    x = tensor.from_poly(poly(tensor.ring, "u*t + v"))
    J = extend_ideal(ideal(tensor.base, "u, v"), tensor)
    pairs = svdp_reduce(x, J)
    assert recompose(pairs, tensor) == x
    assert set(pairs) == {(tensor.base.gen("u"), tensor.K.gen("t")), (tensor.base.gen("v"), tensor.K.one())}


def test_reduce_certificate_on_longer_element(tensor):
    x = tensor.from_poly(poly(tensor.ring, "u^2*t^2 - v*t^2 + u*t + u^3"))
    J = extend_ideal(ideal(tensor.base, "u^2 - v, u"), tensor)
    pairs = svdp_reduce(x, J)
    contracted = contract_ideal(J, tensor)
    assert recompose(pairs, tensor) == x
    assert all(ideal_member(a, contracted) for a, _ in pairs)


def test_reduce_preconditions(tensor):
    J = extend_ideal(ideal(tensor.base, "u"), tensor)
    with pytest.raises(NotInIdealError):
        svdp_reduce(tensor.from_poly(poly(tensor.ring, "v*t")), J)
    with pytest.raises(UncertifiedInputError):
        svdp_reduce(tensor.from_poly(poly(tensor.ring, "u*t")), ideal(tensor.ring, "t"))


def test_fiber_map(tensor):
    x = tensor.from_poly(poly(tensor.ring, "u*t"))
    assert fiber_j(x, 0).is_zero()
    assert fiber_j(x, 1) == tensor.base.gen("u")
    J = extend_ideal(ideal(tensor.base, "u^2 - v"), tensor)
    assert ideal_equal(fiber_j_ideal(J, 3, tensor), contract_ideal(J, tensor))


def test_pullback_contains_fiber_equation(tensor):
    P = fiber_pullback(ideal(tensor.base, "u"), 2, tensor)
    assert ideal_member(poly(tensor.ring, "t - 2"), P)
    assert ideal_member(poly(tensor.ring, "u*t"), P)


def test_pullback_sharp_recovers_extension(tensor):
    result = fiber_pullback_sharp(ideal(tensor.base, "u"), 0, tensor, 5)
    assert ideal_equal(result.final, extend_ideal(ideal(tensor.base, "u"), tensor))
    assert result.final_delta_stable
    generic = fiber_pullback_sharp(Ideal(tensor.base), 0, tensor, 5)
    assert generic.final.is_zero()
    assert generic.status is PsharpStatus.DEGREE_EXHAUSTED
    unit = fiber_pullback_sharp(ideal(tensor.base, "1"), 0, tensor, 5)
    assert unit.final.is_unit() and unit.status is PsharpStatus.FIXPOINT
