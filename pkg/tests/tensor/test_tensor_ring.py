from itertools import product

import pytest

from src.algebra.fields import PrimeField
from src.algebra.polynomial import PolyRing
from src.tensor.ore import LinDiffOp
from src.tensor.tensor_ring import TensorRing, decompose, length_by_search, tensor_length
from src.utils.errors import CharacteristicError, RingMismatchError
from tests.helpers import poly


def test_rejects_bad_bases(tensor):
    with pytest.raises(CharacteristicError):
        TensorRing(PolyRing(PrimeField(3), ["u"]))
    with pytest.raises(RingMismatchError):
        TensorRing(PolyRing(tensor.base.field, ["u", "t"]))


def test_realization_derivation(tensor):
    R = tensor.realization
    assert R.derive(R.gen("t"), 0) == 1
    assert R.derive(R.gen("u"), 0).is_zero()


def test_poly_round_trip(tensor):
    f = poly(tensor.ring, "u*t^2 + v*t - 3*u*v")
    assert tensor.from_poly(f).to_poly() == f


def test_length_examples(tensor):
    u, v = tensor.base.gen("u"), tensor.base.gen("v")
    t = tensor.K.gen("t")
    assert tensor_length(tensor.zero()) == 0
    assert tensor_length(tensor.pure(u, t) + tensor.pure(u, tensor.K.one())) == 1
    assert tensor_length(tensor.pure(u, tensor.K.one()) + tensor.pure(tensor.base.one(), t)) == 2
    assert tensor_length(tensor.pure(u, t) + tensor.pure(v, t)) == 1


def test_decomposition_is_minimal_and_exact(tensor):
    x = tensor.from_poly(poly(tensor.ring, "u*t^2 + v*t + u + v"))
    pairs = decompose(x)
    assert len(pairs) == tensor_length(x) == 2
    assert tensor.from_pairs(pairs) == x


def test_operator_acts_on_second_factor(tensor):
    x = tensor.from_poly(poly(tensor.ring, "u*t^2 + v"))
    dx = x.apply(LinDiffOp.d(tensor.K))
    assert dx.to_poly() == poly(tensor.ring, "2*u*t")


def test_rank_matches_search_on_small_grid(tensor):
    supports = [tensor.base.one(), tensor.base.gen("u"), tensor.base.gen("v")]
    mismatches = 0
    # uma amostra da grade completa de coeficientes em {-1, 0, 1}
    for k, coeffs in enumerate(product((-1, 0, 1), repeat=9)):
        if k % 97:
            continue
        terms = {}
        for j in range(3):
            a = tensor.base.zero()
            for i in range(3):
                a = a + supports[i].scale(coeffs[3 * j + i])
            terms[j] = a
        x = tensor.elem(terms)
        mismatches += tensor_length(x) != length_by_search(x)
    assert mismatches == 0
