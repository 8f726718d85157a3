from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.algebra.fields import QQ, PrimeField
from src.algebra.polynomial import Poly, PolyRing
from src.protocols.poly_grammar import (TokenType, parse_ideal, parse_operator, parse_poly,
                                        parse_poly_list, print_operator, print_poly, print_poly_list,
                                        tokenize)
from src.tensor.ore import LinDiffOp
from src.utils.data_generator import InstanceGenerator
from src.utils.errors import ParseError, UsageError


def test_tokens_carry_positions():
    tokens = tokenize("x^2 + 3/2")
    assert [t.type for t in tokens] == [TokenType.IDENT, TokenType.CARET, TokenType.NUMBER, TokenType.PLUS,
                                        TokenType.NUMBER, TokenType.SLASH, TokenType.NUMBER, TokenType.END]
    assert tokens[3].position == 4


def test_parse_examples(qxy):
    x, y = qxy.gen("x"), qxy.gen("y")
    assert parse_poly("x^2*y + 3/2", qxy) == x * x * y + Fraction(3, 2)
    assert parse_poly("(x+y)^2", qxy) == x * x + (x * y).scale(2) + y * y
    assert parse_poly("  - x -(-y) ", qxy) == y - x
    assert parse_poly("2*3/4", qxy) == qxy.constant(Fraction(3, 2))


@pytest.mark.parametrize("text", ["x^-1", "x/y", "x^y", "x^2^3", "x +", "(x", "z", "x $ y", "1/0"])
def test_malformed_input(qxy, text):
    with pytest.raises(ParseError) as info:
        parse_poly(text, qxy)
    assert isinstance(info.value, UsageError)
    assert 0 <= info.value.position <= len(text)


def test_unknown_variable_position(qxy):
    with pytest.raises(ParseError) as info:
        parse_poly("x + zeta", qxy)
    assert info.value.position == 4


def test_rational_literal_in_char_p():
    ring = PolyRing(PrimeField(5), ["x"])
    assert parse_poly("1/2", ring) == ring.constant(3)
    with pytest.raises(ParseError):
        parse_poly("1/5", ring)


def test_lists_and_ideals(qxy):
    assert len(parse_poly_list("(x, y^2, x - y)", qxy)) == 3
    assert len(parse_poly_list("x, y", qxy)) == 2
    assert parse_poly_list("", qxy) == []
    assert parse_poly_list("(x + y)^2", qxy) == [parse_poly("x^2 + 2*x*y + y^2", qxy)]
    assert str(parse_ideal("x*y, x", qxy)) == "(x)"
    assert print_poly_list([]) == "(0)"


def test_operator_grammar():
    K = PolyRing(QQ, ["t"])
    t = K.gen("t")
    L = parse_operator("t*D^2 + D - 1/2", K)
    assert L == LinDiffOp(K, {2: t, 1: K.one(), 0: K.constant(Fraction(-1, 2))})
    assert print_operator(L) == "(t)*D^2 + D + -1/2"
    assert parse_operator(print_operator(L), K) == L
    assert print_operator(LinDiffOp(K, {})) == "0"


@settings(max_examples=1000, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 31))
def test_print_then_parse_is_identity(seed):
    ring = PolyRing(QQ, ["x", "y", "z"])
    f = InstanceGenerator(seed).poly(ring, max_degree=4, max_terms=5, fractions=True, nonzero=False)
    assert parse_poly(print_poly(f), ring) == f


def test_print_is_deterministic(qxy):
    f = Poly(qxy, {(0, 2): 1, (2, 0): -3, (0, 0): Fraction(1, 3)})
    assert print_poly(f) == "-3*x^2 + y^2 + 1/3"
