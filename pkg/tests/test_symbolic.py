"""Expression trees: folding, suppressed evaluation, printing."""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from casdsl.errors import BadSymbolName, DivisionByZero
from casdsl.symbolic import (
    Binary,
    Call,
    Expr,
    Neg,
    NumberLeaf,
    Sym,
    SymbolLeaf,
    as_expr,
    expr_binop,
    expr_call,
    expr_neg,
    mk_symbol,
    to_string,
)

x, y, z = mk_symbol("x"), mk_symbol("y"), mk_symbol("z")


class TestSymbols:
    def test_print(self):
        assert str(mk_symbol("x")) == "x"

    def test_empty_rejected(self):
        with pytest.raises(BadSymbolName):
            mk_symbol("")

    def test_underscore_names(self):
        assert mk_symbol("alpha_1").name == "alpha_1"

    @pytest.mark.parametrize("bad", ["1a", "a-b", "a b", "à"])
    def test_malformed_rejected(self, bad):
        with pytest.raises(BadSymbolName):
            mk_symbol(bad)

    def test_equality_is_name_equality(self):
        assert mk_symbol("x") == mk_symbol("x")
        assert mk_symbol("x") != mk_symbol("y")
        assert as_expr(mk_symbol("x")) == SymbolLeaf(Sym("x"))


class TestFolding:
    def test_numbers_fold(self):
        assert expr_binop("+", as_expr(1), as_expr(2)) == NumberLeaf(3)

    def test_symbol_suppresses(self):
        assert to_string(expr_binop("+", as_expr(1), as_expr(x))) == "1+x"
        assert to_string(expr_binop("+", as_expr(x), as_expr(y))) == "x+y"

    def test_folded_subtree(self):
        six_plus_x = expr_binop("+", expr_binop("*", as_expr(2), as_expr(3)), as_expr(x))
        assert to_string(six_plus_x) == "6+x"

    def test_division_folds_to_rational(self):
        assert expr_binop("/", as_expr(5), as_expr(9)) == NumberLeaf(Fraction(5, 9))

    def test_division_by_zero_propagates(self):
        with pytest.raises(DivisionByZero):
            expr_binop("/", as_expr(1), as_expr(0))

    def test_operator_overloading_both_sides(self):
        assert to_string(1 + x) == "1+x"
        assert to_string(x + 1) == "x+1"
        assert to_string(2 * x ** 3) == "2*x^3"
        assert (1 + x) == expr_binop("+", as_expr(1), as_expr(x))


class TestNeg:
    def test_number_folds(self):
        assert expr_neg(as_expr(5)) == NumberLeaf(-5)

    def test_symbol_wraps(self):
        assert to_string(expr_neg(as_expr(x))) == "-x"

    def test_double_negation(self):
        assert expr_neg(expr_neg(as_expr(x))) == as_expr(x)


class TestCall:
    def test_sin(self):
        assert to_string(expr_call("sin", [x])) == "sin(x)"

    def test_args(self):
        e = expr_call("f", [as_expr(x), expr_binop("+", as_expr(1), as_expr(y))])
        assert to_string(e) == "f(x,1+y)"

    def test_bad_name(self):
        with pytest.raises(BadSymbolName):
            expr_call("", [as_expr(x)])


class TestPrinting:
    def test_parenthesization(self):
        e = expr_binop("*", expr_binop("+", as_expr(x), as_expr(y)), as_expr(z))
        assert to_string(e) == "(x+y)*z"

    def test_power_prints_caret(self):
        assert to_string(expr_binop("**", as_expr(x), as_expr(3))) == "x^3"

    def test_unary_minus_looser_than_power(self):
        assert to_string(expr_neg(expr_binop("**", as_expr(x), as_expr(2)))) == "-x^2"
        e = expr_binop("**", expr_neg(as_expr(x)), as_expr(2))
        assert to_string(e) == "(-x)^2"

    def test_right_assoc_power(self):
        nested = expr_binop("**", as_expr(x), expr_binop("**", as_expr(y), as_expr(2)))
        assert to_string(nested) == "x^y^2"
        left = expr_binop("**", expr_binop("**", as_expr(x), as_expr(y)), as_expr(2))
        assert to_string(left) == "(x^y)^2"

    def test_same_tier_right_operand(self):
        e = expr_binop("+", as_expr(x), expr_binop("+", as_expr(y), as_expr(z)))
        assert to_string(e) == "x+(y+z)"
        e = expr_binop("-", as_expr(x), expr_binop("-", as_expr(y), as_expr(z)))
        assert to_string(e) == "x-(y-z)"

    def test_negative_right_operand_parenthesized(self):
        e = expr_binop("-", as_expr(x), as_expr(-5))
        assert to_string(e) == "x-(-5)"
        e = expr_binop("+", as_expr(x), expr_neg(as_expr(y)))
        assert to_string(e) == "x+(-y)"

    def test_rational_leaf_binds_like_division(self):
        e = expr_binop("**", as_expr(Fraction(1, 2)), as_expr(x))
        assert to_string(e) == "(1/2)^x"
        e = expr_binop("*", as_expr(Fraction(1, 2)), as_expr(x))
        assert to_string(e) == "1/2*x"


# random construction sequences, as the fold invariant demands

leaves = st.one_of(
    st.integers(-9, 9).map(as_expr),
    st.fractions(min_value=-9, max_value=9, max_denominator=9).map(as_expr),
    st.sampled_from([x, y, z]).map(as_expr),
)


def _combine(children):
    left, right, which = children
    try:
        if which == "neg":
            return expr_neg(left)
        if which == "call":
            return expr_call("f", [left, right])
        if which == "**":
            return expr_binop("**", left, as_expr(abs(right_int(right)) % 4))
        return expr_binop(which, left, right)
    except DivisionByZero:
        return expr_binop("+", left, right)


def right_int(e):
    return e.value if isinstance(e, NumberLeaf) and isinstance(e.value, int) else 2


exprs = st.recursive(
    leaves,
    lambda sub: st.tuples(
        sub, sub, st.sampled_from(["+", "-", "*", "/", "**", "neg", "call"])
    ).map(_combine),
    max_leaves=25,
)


@given(exprs)
def test_fold_completeness(e):
    # no reachable node is an unevaluated operation on two numbers
    def walk(node):
        if isinstance(node, Binary):
            assert not (
                isinstance(node.left, NumberLeaf)
                and isinstance(node.right, NumberLeaf)
            )
            walk(node.left)
            walk(node.right)
        elif isinstance(node, Neg):
            assert not isinstance(node.operand, NumberLeaf)
            walk(node.operand)
        elif isinstance(node, Call):
            for a in node.args:
                walk(a)

    walk(e)


@given(st.integers(-9, 9), st.sampled_from([x, y, z]))
def test_reverse_dispatch_symmetry(n, s):
    for op in ("+", "*"):
        left = expr_binop(op, as_expr(n), as_expr(s))
        right = expr_binop(op, as_expr(s), as_expr(n))
        assert isinstance(left, Binary) and isinstance(right, Binary)
        assert to_string(left).startswith(str(n))
        assert to_string(right).endswith(str(n))
