import pytest

from src.differential.lemmas import (closure_monotone, verify_bracket_nil2, verify_colon_lemma,
                                     verify_idempotents, verify_lemma_easy, verify_min_rad,
                                     verify_nilpotency, verify_super_lemma)
from src.utils.errors import CharacteristicError, UncertifiedInputError
from tests.helpers import ideal, poly


def test_lemma_easy(radial, line):
    assert verify_lemma_easy(radial, ideal(radial, "x"), samples=5).passed
    assert verify_lemma_easy(line, ideal(line, "1"), samples=3).passed


def test_nilpotency_in_dual_ring(dual_q):
    report = verify_nilpotency(dual_q, dual_q.gen("x"), 2)
    assert report.passed
    assert report.instances > 0


def test_nilpotency_requires_nilpotent_input(dual_q, dual_f2):
    with pytest.raises(UncertifiedInputError):
        verify_nilpotency(dual_q, poly(dual_q, "x + 1"), 2)
    with pytest.raises(CharacteristicError):
        verify_nilpotency(dual_f2, dual_f2.gen("x"), 2)


@pytest.mark.parametrize("name", ["dual_q", "dual_f2"])
def test_super_lemma_products_vanish(name, request):
    R = request.getfixturevalue(name)
    report = verify_super_lemma(R, R.derivations, ideal(R, "x"), ideal(R, "y"), maxord=2)
    assert report.passed


def test_super_lemma_rejects_meeting_ideals(dual_q):
    with pytest.raises(UncertifiedInputError):
        verify_super_lemma(dual_q, dual_q.derivations, ideal(dual_q, "x"), ideal(dual_q, "x"))


def test_bracket_intersection_is_square_zero(dual_q):
    assert verify_bracket_nil2(dual_q, dual_q.derivations, ideal(dual_q, "x"), ideal(dual_q, "y")).passed


def test_colon_lemma_on_radial_line(radial):
    report = verify_colon_lemma(radial, ideal(radial, "x"), [radial.gen("x"), poly(radial, "x + 1")],
                                samples=3, radical=True)
    assert report.passed


def test_min_rad_small_instances(line, radial):
    assert verify_min_rad(line, ideal(line, "x^2"), ideal(line, "x"), N=3, samples=2, max_order=2).passed
    assert verify_min_rad(radial, ideal(radial, "x"), ideal(radial, "x"), N=3, samples=2, max_order=2).passed


def test_idempotents_are_constants(line):
    assert verify_idempotents(line, [line.ring.one(), line.ring.zero(), line.gen("x")]).passed


def test_closure_grows_with_bound(line):
    assert closure_monotone(ideal(line, "x^3"), line, [0, 1, 2, 3]).passed
