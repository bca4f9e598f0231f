"""Expression parsing and evaluation."""

import pytest

from catnum import core, expr
from catnum.errors import (
    ArityError,
    LiteralTooLarge,
    ParseError,
    Underflow,
    UnknownName,
)

n = core.to_int


def test_parse_shapes():
    node = expr.parse_expr("add(10, 5)")
    assert isinstance(node, expr.Call)
    assert node.name == "add"
    assert [arg.value for arg in node.args] == [10, 5]
    nested = expr.parse_expr("sub(exp2(exp2(12345)), exp2(6789))")
    assert nested.name == "sub"
    assert nested.args[0].name == "exp2"
    assert nested.args[0].args[0].name == "exp2"


def test_eval_goldens():
    assert n(expr.eval_text("divide(26,3)")) == 8
    assert n(expr.eval_text("remainder(26, 3)")) == 2
    assert n(expr.eval_text("catsize(mersenne())")) == 25
    assert n(expr.eval_text("add(10, 5)")) == 15
    assert n(expr.eval_text("42")) == 42


def test_tower_alias():
    assert expr.eval_text("tower(5)") == expr.eval_text("best_case(5)")


def test_whitespace_tolerated():
    assert n(expr.eval_text(" mul( 6 , 7 ) ")) == 42


def test_parse_errors():
    with pytest.raises(ParseError):
        expr.parse_expr("add(1,")
    with pytest.raises(ParseError):
        expr.parse_expr("")
    with pytest.raises(ParseError):
        expr.parse_expr("add(1, 2) extra")
    with pytest.raises(ParseError):
        expr.parse_expr("add 1 2")
    with pytest.raises(ParseError):
        expr.parse_expr("#")


def test_error_positions():
    with pytest.raises(ParseError) as info:
        expr.parse_expr("add(1, %)")
    assert info.value.position == 7


def test_arity_error():
    with pytest.raises(ArityError):
        expr.parse_expr("add(1)")
    with pytest.raises(ArityError):
        expr.parse_expr("successor(1, 2)")
    with pytest.raises(ArityError):
        expr.parse_expr("mersenne(5)")


def test_unknown_name():
    with pytest.raises(UnknownName):
        expr.parse_expr("frobnicate(1)")


def test_literal_cap():
    with pytest.raises(LiteralTooLarge):
        expr.parse_expr(str(2 ** 64 + 1))
    assert n(expr.eval_text(str(2 ** 64))) == 2 ** 64


def test_arithmetic_errors_propagate():
    with pytest.raises(Underflow):
        expr.eval_text("sub(3, 5)")
