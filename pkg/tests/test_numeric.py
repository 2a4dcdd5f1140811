"""Exact number arithmetic and the INT < RAT lattice."""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from casdsl.errors import DemotionError, DivisionByZero, UnsupportedExponent
from casdsl.numeric import (
    NumberType,
    format_number,
    most_general_number_type,
    normalize,
    num_binop,
    num_compare,
    promote,
    type_of,
)

INT, RAT = NumberType.INT, NumberType.RAT


def pow_by_squaring(a: int, n: int) -> int:
    # independent oracle: no ** anywhere
    result, base = 1, a
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


class TestBinop:
    def test_add(self):
        assert num_binop("+", 1, 2) == 3

    def test_division_makes_rationals(self):
        assert num_binop("/", 5, 9) == Fraction(5, 9)
        assert isinstance(num_binop("/", 5, 9), Fraction)

    def test_exact_division_demotes_to_int(self):
        r = num_binop("/", 4, 2)
        assert r == 2 and isinstance(r, int)

    def test_big_power_is_exact(self):
        assert num_binop("**", 2, 200) == pow_by_squaring(2, 200)
        assert format_number(num_binop("**", 2, 200)) == str(pow_by_squaring(2, 200))

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            num_binop("/", 1, 0)
        with pytest.raises(DivisionByZero):
            num_binop("/", Fraction(1, 2), 0)

    def test_bad_exponents(self):
        with pytest.raises(UnsupportedExponent):
            num_binop("**", 2, -1)
        with pytest.raises(UnsupportedExponent):
            num_binop("**", 2, Fraction(1, 2))

    def test_fraction_power(self):
        assert num_binop("**", Fraction(1, 2), 2) == Fraction(1, 4)


class TestCompare:
    def test_equal(self):
        assert num_compare(Fraction(1, 2), Fraction(1, 2)) == 0

    def test_less(self):
        assert num_compare(Fraction(1, 2), 1) == -1

    def test_big_greater(self):
        assert num_compare(2**64, 2**64 - 1) == 1


class TestPromote:
    def test_int_to_rat(self):
        r = promote(3, RAT)
        assert isinstance(r, Fraction) and r == 3

    def test_idempotent(self):
        assert promote(Fraction(3), RAT) == Fraction(3)

    def test_demotion_rejected(self):
        with pytest.raises(DemotionError):
            promote(Fraction(5, 9), INT)


class TestLattice:
    def test_join_examples(self):
        assert most_general_number_type(INT, RAT) is RAT
        assert most_general_number_type(INT, INT) is INT
        assert most_general_number_type(RAT, RAT) is RAT

    def test_laws_exhaustive(self):
        types = [INT, RAT]
        for a in types:
            assert most_general_number_type(a, a) is a
            for b in types:
                assert most_general_number_type(a, b) is most_general_number_type(b, a)
                for c in types:
                    assert most_general_number_type(
                        a, most_general_number_type(b, c)
                    ) is most_general_number_type(most_general_number_type(a, b), c)


numbers = st.one_of(
    st.integers(-10**6, 10**6),
    st.fractions(min_value=-10**4, max_value=10**4, max_denominator=10**4),
).map(normalize)


@given(numbers, numbers.filter(lambda b: b != 0))
def test_field_division_round_trip(a, b):
    assert num_binop("*", num_binop("/", a, b), b) == a


@given(numbers, numbers)
def test_results_are_normalized(a, b):
    for op in "+-*":
        r = num_binop(op, a, b)
        if isinstance(r, Fraction):
            assert r.denominator > 1
    if b != 0:
        r = num_binop("/", a, b)
        if isinstance(r, Fraction):
            assert r.denominator > 1


@given(st.integers(-9, 9), st.integers(0, 12), st.integers(0, 12))
def test_power_law(a, m, n):
    assert num_binop("**", a, m + n) == num_binop(
        "*", num_binop("**", a, m), num_binop("**", a, n)
    )


@given(numbers, numbers)
def test_promote_preserves_order(a, b):
    assert num_compare(promote(a, RAT), promote(b, RAT)) == num_compare(a, b)


def test_type_of():
    assert type_of(3) is INT
    assert type_of(Fraction(1, 2)) is RAT
    assert type_of(promote(3, RAT)) is RAT


def test_format():
    assert format_number(-5) == "-5"
    assert format_number(Fraction(5, 9)) == "5/9"
    assert format_number(Fraction(4, 1)) == "4"
