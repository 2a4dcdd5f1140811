"""Immutable symbolic expression trees with eager numeric folding.

An operation on two numbers computes; an operation that meets a symbol
builds a tree node instead (the evaluation is suppressed).  Folding is
the only simplification done here: ``2*3+x`` becomes the tree ``6+x``,
but ``x+x`` stays ``x+x`` -- collecting terms is the polynomial layer's
job.  Numbers work on either side of an operator (``1+x`` and ``x+1``
both build), which is what the reflected dunder methods provide.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadSymbolName, CasTypeError
from .numeric import Number, format_number, normalize, num_binop

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
BINARY_OPS = ("+", "-", "*", "/", "**")


class _Operand:
    """Operator overloading shared by Sym and Expr."""

    def __add__(self, other):
        return _dispatch("+", self, other)

    def __radd__(self, other):
        return _dispatch("+", other, self)

    def __sub__(self, other):
        return _dispatch("-", self, other)

    def __rsub__(self, other):
        return _dispatch("-", other, self)

    def __mul__(self, other):
        return _dispatch("*", self, other)

    def __rmul__(self, other):
        return _dispatch("*", other, self)

    def __truediv__(self, other):
        return _dispatch("/", self, other)

    def __rtruediv__(self, other):
        return _dispatch("/", other, self)

    def __pow__(self, other):
        return _dispatch("**", self, other)

    def __rpow__(self, other):
        return _dispatch("**", other, self)

    def __neg__(self):
        return expr_neg(as_expr(self))


def _dispatch(op, left, right):
    try:
        return expr_binop(op, as_expr(left), as_expr(right))
    except CasTypeError:
        return NotImplemented


@dataclass(frozen=True)
class Sym(_Operand):
    """A symbol; two symbols are equal exactly when their names are."""

    name: str

    def __post_init__(self):
        if not NAME_RE.match(self.name or ""):
            raise BadSymbolName(f"invalid symbol name {self.name!r}")

    def __str__(self):
        return self.name


def mk_symbol(name: str) -> Sym:
    return Sym(name)


@dataclass(frozen=True)
class Expr(_Operand):
    """Base of the expression tree variants."""

    def __str__(self):
        return to_string(self)


@dataclass(frozen=True)
class NumberLeaf(Expr):
    value: Number


@dataclass(frozen=True)
class SymbolLeaf(Expr):
    sym: Sym


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr


@dataclass(frozen=True)
class Binary(Expr):
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Call(Expr):
    fname: str
    args: tuple[Expr, ...]


def as_expr(x) -> Expr:
    """Lift a number or symbol into an Expr; Exprs pass through."""
    if isinstance(x, Expr):
        return x
    if isinstance(x, Sym):
        return SymbolLeaf(x)
    if isinstance(x, bool):
        raise CasTypeError("cannot use a boolean in a symbolic expression")
    if isinstance(x, (int, Fraction)):
        return NumberLeaf(normalize(x))
    raise CasTypeError(
        f"cannot use {type(x).__name__} in a symbolic expression"
    )


def expr_binop(op: str, left, right) -> Expr:
    """Build ``left op right``, folding when both sides are numbers."""
    if op not in BINARY_OPS:
        raise ValueError(f"unknown operator {op!r}")
    l, r = as_expr(left), as_expr(right)
    if isinstance(l, NumberLeaf) and isinstance(r, NumberLeaf):
        return NumberLeaf(num_binop(op, l.value, r.value))
    return Binary(op, l, r)


def expr_neg(e) -> Expr:
    e = as_expr(e)
    if isinstance(e, NumberLeaf):
        return NumberLeaf(normalize(-e.value))
    if isinstance(e, Neg):
        return e.operand
    return Neg(e)


def expr_call(fname: str, args) -> Expr:
    if not NAME_RE.match(fname or ""):
        raise BadSymbolName(f"invalid function name {fname!r}")
    return Call(fname, tuple(as_expr(a) for a in args))


# Rendering.  Precedence mirrors the parser: +,- then *,/ then unary
# minus then power; powers print as ^.  Parentheses are inserted exactly
# where reparsing would otherwise change the tree, so printing and
# parsing are mutually inverse.

_PREC = {"+": 10, "-": 10, "*": 20, "/": 20, "**": 40}
_PREC_NEG = 25
_PREC_ATOM = 100


def _prec(e: Expr) -> int:
    if isinstance(e, NumberLeaf):
        if isinstance(e.value, Fraction):
            return _PREC["/"]  # prints as a/b
        return _PREC_ATOM if e.value >= 0 else _PREC_NEG
    if isinstance(e, Neg):
        return _PREC_NEG
    if isinstance(e, Binary):
        return _PREC[e.op]
    return _PREC_ATOM


def to_string(e: Expr) -> str:
    if isinstance(e, NumberLeaf):
        return format_number(e.value)
    if isinstance(e, SymbolLeaf):
        return e.sym.name
    if isinstance(e, Neg):
        inner = to_string(e.operand)
        if _prec(e.operand) < _PREC_NEG:
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(e, Call):
        return f"{e.fname}({','.join(to_string(a) for a in e.args)})"
    if isinstance(e, Binary):
        p = _PREC[e.op]
        right_assoc = e.op == "**"
        ls = to_string(e.left)
        if _prec(e.left) <= p if right_assoc else _prec(e.left) < p:
            ls = f"({ls})"
        rs = to_string(e.right)
        need = _prec(e.right) < p if right_assoc else _prec(e.right) <= p
        if need or rs.startswith("-"):
            rs = f"({rs})"
        ops = "^" if e.op == "**" else e.op
        return f"{ls}{ops}{rs}"
    raise TypeError(f"not an Expr: {e!r}")
