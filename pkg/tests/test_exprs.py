from fractions import Fraction

import pytest

from jacobilie.exprs import ExprError, eval_expr, eval_predicate, expr_names, parse_expr


def test_rational_literals():
    assert eval_expr("1/2") == Fraction(1, 2)
    assert eval_expr("-(3+1)/8") == Fraction(-1, 2)


def test_parameters_and_precedence():
    env = {"a": Fraction(2), "b": Fraction(3)}
    assert eval_expr("(a+1)/(a-1)", env) == 3
    assert eval_expr("-2*(a*b+1)/((a+1)*(b-1))", env) == Fraction(-7, 3)
    assert eval_expr("a - b - 1", env) == -2


def test_predicates():
    assert eval_predicate("a > 0", {"a": Fraction(1, 2)})
    assert not eval_predicate("a != 1", {"a": Fraction(1)})
    assert eval_predicate("b != -(a+3)/(a-1)", {"a": Fraction(2), "b": Fraction(3)})
    assert not eval_predicate("b != -(a+3)/(a-1)", {"a": Fraction(2), "b": Fraction(-5)})


def test_errors():
    with pytest.raises(ExprError):
        eval_expr("a +", {"a": 1})
    with pytest.raises(ExprError):
        eval_expr("q", {})
    with pytest.raises(ExprError):
        eval_expr("1/(a-a)", {"a": 2})
    with pytest.raises(ExprError):
        eval_expr("a > 0", {"a": 1})  # predicate where a value is expected
    with pytest.raises(ExprError):
        eval_predicate("a + 1", {"a": 1})
    with pytest.raises(ExprError):
        parse_expr("2 ** 3")


def test_expr_names():
    assert expr_names("-2*(a*b+1)/((a+1)*(b-1))") == {"a", "b"}
    assert expr_names("3/4") == set()
