import pytest

from src.algebra.ideal import ideal_contains, ideal_equal
from src.differential.dideal import (MembershipStatus, PsharpStatus, bracket_closure, delta_close,
                                     delta_member, is_delta_ideal, keigher_witness, primality_falsify,
                                     psharp, radical_delta, radical_delta_run)
from src.utils.errors import CharacteristicError, ProperIdealError
from tests.helpers import ideal, poly


def test_delta_close_examples(radial, line, zero_ring):
    closure = delta_close(ideal(radial, "x"), radial, 3)
    assert closure.certified
    assert ideal_equal(closure.result, ideal(radial, "x"))
    assert delta_close(ideal(line, "x"), line, 1).result.is_unit()
    same = delta_close(ideal(zero_ring, "x^2 + 1"), zero_ring, 4)
    assert ideal_equal(same.result, ideal(zero_ring, "x^2 + 1"))


def test_certified_closure_records_bound(radial):
    closure = delta_close(ideal(radial, "x^2"), radial, 2)
    assert closure.result.delta_bound == 2


def test_is_delta_ideal_examples(radial, line, charp_line):
    assert is_delta_ideal(ideal(radial, "x"), radial)
    assert not is_delta_ideal(ideal(line, "x"), line)
    assert is_delta_ideal(ideal(charp_line, "x^2"), charp_line)


def test_delta_membership(line, radial):
    assert delta_member(line.ring.one(), ideal(line, "x"), line, 1).status is MembershipStatus.YES
    answer = delta_member(radial.ring.one(), ideal(radial, "x"), radial, 5)
    assert answer.status is MembershipStatus.NO
    assert not answer.is_member
    assert delta_member(poly(line, "x^3"), ideal(line, "x"), line, 0).is_member


def test_radical_delta_examples(line, radial):
    assert radical_delta(ideal(line, "x^2"), line).is_unit()
    assert ideal_equal(radical_delta(ideal(radial, "x^2"), radial), ideal(radial, "x"))
    run = radical_delta_run(ideal(radial, "x"), radial)
    assert run.fixpoint
    assert ideal_equal(run.ideal, ideal(radial, "x"))


def test_radical_delta_refuses_positive_characteristic(charp_line):
    with pytest.raises(CharacteristicError):
        radical_delta(ideal(charp_line, "x^2"), charp_line)


def test_psharp_on_simple_line(line):
    result = psharp(ideal(line, "x"), line, 6)
    assert result.status is PsharpStatus.DEGREE_EXHAUSTED
    assert result.final.is_zero()
    expected = [ideal(line, f"x^{k}") for k in range(1, 7)]
    assert len(result.trace) == len(expected)
    assert all(ideal_equal(a, b) for a, b in zip(result.trace, expected))
    assert result.final_delta_stable and result.final_in_p


def test_psharp_radial_leaf_is_fixpoint(radial):
    result = psharp(ideal(radial, "x"), radial, 6)
    assert result.status is PsharpStatus.FIXPOINT
    assert result.steps == 0
    assert ideal_equal(result.final, ideal(radial, "x"))


def test_psharp_radial_non_leaf_collapses(radial):
    result = psharp(ideal(radial, "x - 1"), radial, 6)
    assert result.final.is_zero()
    assert ideal_contains(ideal(radial, "x - 1"), result.final)


def test_psharp_in_char_two_quotient(nilsquare):
    result = psharp(ideal(nilsquare, "x"), nilsquare, 6)
    assert ideal_equal(result.final, nilsquare.zero_ideal())


def test_psharp_iteration_cap(line):
    result = psharp(ideal(line, "x"), line, 6, maxiter=2)
    assert result.status is PsharpStatus.ITERATION_CAPPED
    assert len(result.trace) == 3


def test_psharp_rejects_unit_ideal(line):
    with pytest.raises(ProperIdealError):
        psharp(ideal(line, "1"), line)


def test_psharp_json(radial):
    data = psharp(ideal(radial, "x"), radial, 4).to_json()
    assert data["status"] == "fixpoint"
    assert data["final"] == "(x)"


def test_primality_falsify(nilsquare, euler):
    J = ideal(euler, "x*y")
    witness = primality_falsify(J, euler, trials=20)
    assert witness is not None
    assert not J.contains(witness.f) and not J.contains(witness.g)
    assert J.contains(witness.f * witness.g)
    assert primality_falsify(ideal(euler, "x"), euler, trials=20) is None
    nil = primality_falsify(nilsquare.zero_ideal(), nilsquare, trials=10)
    assert nil.f == nilsquare.gen("x") and nil.g == nilsquare.gen("x")


def test_keigher_witness_on_plane(plane):
    p = ideal(plane, "x, y")
    witness = keigher_witness(p, plane.gen("x"), plane.gen("y"), plane)
    assert witness.product_outside
    assert witness.theta_x.order == 1 and witness.theta_y.order == 1


def test_bracket_closure_in_dual_ring(dual_f2):
    closed = bracket_closure(ideal(dual_f2, "x"), dual_f2, dual_f2.derivations)
    assert ideal_equal(closed, ideal(dual_f2, "x, y"))
