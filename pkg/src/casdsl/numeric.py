"""Exact numbers and the numeric half of the coercion lattice.

Values are plain ``int`` (arbitrary precision) and ``fractions.Fraction``
(always reduced, positive denominator).  There is no floating point
anywhere: ``/`` is exact field division, and a quotient that reduces to a
whole number is demoted back to ``int`` so every value has one canonical
representation.
"""
from __future__ import annotations

from enum import IntEnum
from fractions import Fraction

from .errors import DemotionError, DivisionByZero, UnsupportedExponent

Number = int | Fraction


class NumberType(IntEnum):
    """Numeric domains, totally ordered: INT < RAT."""

    INT = 0
    RAT = 1


def normalize(x: Number) -> Number:
    """Demote a whole-valued Fraction to int; anything else passes through."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def type_of(x: Number) -> NumberType:
    return NumberType.RAT if isinstance(x, Fraction) else NumberType.INT


def most_general_number_type(t1: NumberType, t2: NumberType) -> NumberType:
    """Least upper bound of two numeric domains."""
    return max(t1, t2)


def promote(a: Number, t: NumberType) -> Number:
    """Value-preserving embedding of ``a`` into domain ``t``.

    Unlike arithmetic results, the embedding is not demoted: promoting an
    int to RAT really yields a Fraction (printed without the /1).
    """
    if t < type_of(a):
        raise DemotionError(f"cannot demote {format_number(a)} to {t.name}")
    if t is NumberType.RAT:
        return Fraction(a)
    return a


def num_binop(op: str, a: Number, b: Number) -> Number:
    if op == "+":
        return normalize(a + b)
    if op == "-":
        return normalize(a - b)
    if op == "*":
        return normalize(a * b)
    if op == "/":
        if b == 0:
            raise DivisionByZero("division by zero")
        return normalize(Fraction(a) / Fraction(b))
    if op == "**":
        if not isinstance(b, int):
            raise UnsupportedExponent(
                f"exponent must be an integer, got {format_number(b)}"
            )
        if b < 0:
            raise UnsupportedExponent("negative exponents are not supported")
        return normalize(a**b)
    raise ValueError(f"unknown operator {op!r}")


def num_compare(a: Number, b: Number) -> int:
    """Total order by rational value: -1, 0 or 1."""
    return (a > b) - (a < b)


def format_number(x: Number) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))
