"""Statement evaluation: environment, builtins, coercion and display.

Values are the plain domain objects themselves: int/Fraction, Sym,
Expr, Polynomial, Ring, Ideal, Python lists, order/domain keywords and
builtin functions.  Arithmetic between number-ish and symbolic values
goes through the expression layer (folding numbers, suppressing
evaluation at symbols); as soon as a polynomial is involved the other
operand is coerced into a common ring and the polynomial layer takes
over, per the most-general-structure rule.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .errors import (
    CasError,
    CasNameError,
    CasTypeError,
    DivisionByZero,
    EmptyInput,
    UnsupportedExponent,
)
from .numeric import NumberType, format_number, most_general_number_type, normalize
from .symbolic import (
    Expr,
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
from .polynomials import (
    GRADED,
    LEX,
    Elim,
    Graded,
    Lex,
    MonomialOrder,
    Polynomial,
    Ring,
    collect_symbols,
    expr_to_poly,
    infer_ring,
    join_ring,
    most_general_number_type_of,
    re_embed,
)
from .groebner import GBStats, Ideal, buchberger, ideal_intersect
from . import parser

Value = Any


@dataclass(frozen=True)
class BuiltinFn:
    name: str
    fn: Callable[..., Value]


class Environment:
    """Global name bindings plus the session flags."""

    def __init__(self, auto_symbols: bool = True, implicit_mul: bool = False,
                 gb_hook: Callable[[str, GBStats], None] | None = None):
        self.bindings: dict[str, Value] = {}
        self.auto_symbols = auto_symbols
        self.implicit_mul = implicit_mul
        self.gb_hook = gb_hook

    def bind(self, name: str, value: Value):
        self.bindings[name] = value

    def lookup(self, name: str) -> Value | None:
        return self.bindings.get(name)


def resolve_identifier(env: Environment, name: str) -> Value:
    """Binding wins; otherwise a fresh symbol when auto-symbols are on.

    Auto-symbols are deliberately not cached into the environment, so a
    later assignment to the name is an ordinary rebinding.
    """
    value = env.lookup(name)
    if value is not None:
        return value
    if env.auto_symbols:
        return mk_symbol(name)
    raise CasNameError(f"name '{name}' is not defined")


def eval_stmt(env: Environment, stmt: parser.Stmt) -> Value:
    if isinstance(stmt, parser.Assign):
        value = eval_expr(env, stmt.value)
        env.bind(stmt.target, value)
        return value
    if isinstance(stmt, parser.MultiAssign):
        value = eval_expr(env, stmt.value)
        if not isinstance(value, list):
            raise CasTypeError(
                f"cannot unpack {type_name(value)} into {len(stmt.targets)} names",
                stmt.pos,
            )
        if len(value) != len(stmt.targets):
            raise CasTypeError(
                f"cannot unpack {len(value)} values into {len(stmt.targets)} names",
                stmt.pos,
            )
        for name, item in zip(stmt.targets, value):
            env.bind(name, item)
        return value
    if isinstance(stmt, parser.ExprStmt):
        return eval_expr(env, stmt.expr)
    raise TypeError(f"not a statement: {stmt!r}")


def eval_expr(env: Environment, node: parser.ExprAst) -> Value:
    try:
        return _eval(env, node)
    except CasError as err:
        if err.position is None:
            err.position = node.pos
        raise


def _eval(env: Environment, node: parser.ExprAst) -> Value:
    if isinstance(node, parser.IntLit):
        return node.value
    if isinstance(node, parser.StrLit):
        return node.value
    if isinstance(node, parser.Ident):
        return resolve_identifier(env, node.name)
    if isinstance(node, parser.UnaryNeg):
        return value_neg(eval_expr(env, node.operand))
    if isinstance(node, parser.BinOp):
        left = eval_expr(env, node.left)
        right = eval_expr(env, node.right)
        return value_binop(node.op, left, right)
    if isinstance(node, parser.ListLit):
        return [eval_expr(env, el) for el in node.elements]
    if isinstance(node, parser.CallAst):
        callee = env.lookup(node.name)
        args = [eval_expr(env, a) for a in node.args]
        if isinstance(callee, BuiltinFn):
            return callee.fn(env, *args)
        if callee is None and not env.auto_symbols:
            raise CasNameError(f"name '{node.name}' is not defined")
        if env.implicit_mul and len(args) == 1:
            # juxtaposition: anything not bound to a callable multiplies
            receiver = callee if callee is not None else mk_symbol(node.name)
            return value_binop("*", receiver, args[0])
        if callee is None:
            # unknown function names stay symbolic: sin(x) is a tree
            return expr_call(node.name, [_to_call_arg(a) for a in args])
        raise CasTypeError(f"'{node.name}' is not callable")
    if isinstance(node, parser.MethodCall):
        receiver = eval_expr(env, node.receiver)
        args = [eval_expr(env, a) for a in node.args]
        return _call_method(env, receiver, node.name, args)
    raise TypeError(f"not an expression node: {node!r}")


# value arithmetic

_EXPRISH = (int, Fraction, Sym, Expr)


def _to_call_arg(v: Value) -> Expr:
    if not isinstance(v, _EXPRISH):
        raise CasTypeError(
            f"cannot use {type_name(v)} as a function argument"
        )
    return as_expr(v)


def _unwrap(e: Expr) -> Value:
    if isinstance(e, NumberLeaf):
        return e.value
    if isinstance(e, SymbolLeaf):
        return e.sym
    return e


def value_neg(v: Value) -> Value:
    if isinstance(v, bool):
        raise CasTypeError("cannot negate a boolean")
    if isinstance(v, (int, Fraction)):
        return normalize(-v)
    if isinstance(v, (Sym, Expr)):
        return _unwrap(expr_neg(as_expr(v)))
    if isinstance(v, Polynomial):
        return -v
    raise CasTypeError(f"cannot negate {type_name(v)}")


def value_binop(op: str, a: Value, b: Value) -> Value:
    if isinstance(a, Polynomial) or isinstance(b, Polynomial):
        return _poly_binop(op, a, b)
    if isinstance(a, _EXPRISH) and isinstance(b, _EXPRISH):
        return _unwrap(expr_binop(op, as_expr(a), as_expr(b)))
    raise CasTypeError(
        f"unsupported operand types for '{op}': {type_name(a)} and {type_name(b)}"
    )


def _poly_binop(op: str, a: Value, b: Value) -> Value:
    if op == "**":
        if not isinstance(a, Polynomial):
            raise CasTypeError("a polynomial exponent is not supported")
        if isinstance(b, (Sym, Expr, Polynomial)):
            raise CasTypeError("symbolic exponents on polynomials are not supported")
        if not isinstance(b, int) or isinstance(b, bool):
            raise UnsupportedExponent("exponent must be an integer")
        return a**b
    if op == "/":
        c = _constant_of(b)
        if c is None:
            raise CasTypeError("cannot divide by a non-constant polynomial")
        if not isinstance(a, Polynomial):
            return value_binop("/", a, c)
        if c == 0:
            raise DivisionByZero("division by zero")
        # field division leaves Z; the quotient lives over Q
        target = Ring(NumberType.RAT, a.ring.variables, a.ring.order)
        return re_embed(a, target).scale(normalize(Fraction(1) / Fraction(c)))
    pa, pb = _coerce_pair(a, b)
    if op == "+":
        return pa + pb
    if op == "-":
        return pa - pb
    if op == "*":
        return pa * pb
    raise CasTypeError(f"unsupported operator '{op}' for polynomials")


def _constant_of(v: Value) -> Value | None:
    if isinstance(v, (int, Fraction)):
        return v
    if isinstance(v, Polynomial):
        return v.constant_value()
    return None


def _coerce_pair(a: Value, b: Value) -> tuple[Polynomial, Polynomial]:
    if isinstance(a, Polynomial) and isinstance(b, Polynomial):
        if a.ring == b.ring:
            return a, b
        target = join_ring(a.ring, b.ring)
        return re_embed(a, target), re_embed(b, target)
    if isinstance(a, Polynomial):
        target, q = _embed_with(a, b)
        return re_embed(a, target), q
    target, q = _embed_with(b, a)
    return q, re_embed(b, target)


def _embed_with(poly: Polynomial, other: Value) -> tuple[Ring, Polynomial]:
    """Coerce a number/symbol/expression next to a polynomial.

    The polynomial's ring wins unless the other operand needs more (a
    new symbol, or rational content over Z); then both move into the
    join ring, keeping the polynomial's monomial order.
    """
    if not isinstance(other, _EXPRISH):
        raise CasTypeError(
            f"unsupported operand types: {type_name(poly)} and {type_name(other)}"
        )
    e = as_expr(other)
    needed = Ring(
        most_general_number_type_of(e), collect_symbols(e), poly.ring.order
    )
    if set(needed.variables) <= set(poly.ring.variables) and (
        needed.domain <= poly.ring.domain
    ):
        return poly.ring, expr_to_poly(poly.ring, e)
    target = join_ring(poly.ring, needed)
    return target, expr_to_poly(target, e)


def _run_gb(env: Environment, label: str, fn):
    stats = GBStats()
    result = fn(stats)
    if env.gb_hook is not None:
        env.gb_hook(label, stats)
    return result


# methods

def _call_method(env: Environment, receiver: Value, name: str, args: list) -> Value:
    if isinstance(receiver, Ideal):
        if name == "GB":
            _require_arity("GB", args, 0)
            basis = _run_gb(env, "GB", lambda st: receiver.reduced_basis(st))
            return Ideal.from_reduced_basis(receiver.ring, basis)
        if name == "intersect":
            _require_arity("intersect", args, 1)
            other = args[0]
            if not isinstance(other, Ideal):
                raise CasTypeError(
                    f"intersect() expects an ideal, got {type_name(other)}"
                )
            return _run_gb(
                env, "intersect", lambda st: ideal_intersect(receiver, other, st)
            )
    if isinstance(receiver, Ring):
        if name == "valueOf":
            _require_arity("valueOf", args, 1)
            return _value_of(receiver, args[0])
    raise CasTypeError(f"no method '{name}' for {type_name(receiver)}")


def _require_arity(name: str, args: list, n: int):
    if len(args) != n:
        raise CasTypeError(f"{name}() takes {n} argument(s), got {len(args)}")


def _value_of(ring: Ring, v: Value) -> Polynomial:
    if isinstance(v, Polynomial):
        return re_embed(v, ring)
    if not isinstance(v, _EXPRISH):
        raise CasTypeError(f"cannot convert {type_name(v)} to a polynomial")
    return expr_to_poly(ring, as_expr(v))


# builtins

def _bi_symbols(env: Environment, *names) -> list:
    if not names:
        raise EmptyInput("symbols() needs at least one name")
    out = []
    for n in names:
        if not isinstance(n, str):
            raise CasTypeError("symbols() expects strings, like symbols('x','y')")
        out.append(mk_symbol(n))
    return out


def _ring_of_values(values, order: MonomialOrder | None = None,
                    force_rational: bool = False) -> Ring:
    """Infer the common ring of a mixed list of values.

    Expressions contribute their symbols and numeric content;
    polynomials contribute their whole ring (variables, domain and,
    when no order was requested, their order).
    """
    names: set[str] = set()
    domain = NumberType.INT
    found: MonomialOrder | None = None
    for v in values:
        if isinstance(v, Polynomial):
            names.update(v.ring.variables)
            domain = most_general_number_type(domain, v.ring.domain)
            if found is None:
                found = v.ring.order
        else:
            e = as_expr(v)
            names.update(collect_symbols(e))
            domain = most_general_number_type(
                domain, most_general_number_type_of(e)
            )
    if force_rational:
        domain = NumberType.RAT
    return Ring(domain, tuple(sorted(names)), order or found or GRADED)


def _to_poly(ring: Ring, v: Value) -> Polynomial:
    if isinstance(v, Polynomial):
        return re_embed(v, ring)
    return expr_to_poly(ring, as_expr(v))


def _bi_groebner(env: Environment, F, order: Value = GRADED) -> list:
    if not isinstance(F, list):
        raise CasTypeError("groebner() expects a list of polynomials")
    if not F:
        raise EmptyInput("groebner() of an empty list")
    if not isinstance(order, MonomialOrder):
        raise CasTypeError("the order must be 'lex' or 'graded'")
    ring = _ring_of_values(F, order=order, force_rational=True)
    polys = [_to_poly(ring, v) for v in F]
    return list(_run_gb(env, "groebner", lambda st: buchberger(polys, stats=st)))


def _bi_ideal(env: Environment, gens) -> Ideal:
    if not isinstance(gens, list):
        raise CasTypeError("ideal() expects a list of generators")
    if not gens:
        raise EmptyInput("ideal() of an empty list")
    ring = _ring_of_values(gens, force_rational=True)
    return Ideal(ring, [_to_poly(ring, v) for v in gens])


def _bi_polynomial_ring(env: Environment, *args) -> Ring:
    if not args:
        raise CasTypeError(
            "PolynomialRing() expects (Q|Z, 'names'[, order]) or a list"
        )
    first = args[0]
    if isinstance(first, list):
        if not first:
            raise EmptyInput("PolynomialRing() of an empty list")
        order = args[1] if len(args) > 1 else GRADED
        if len(args) > 2 or not isinstance(order, MonomialOrder):
            raise CasTypeError("PolynomialRing() expects at most a list and an order")
        return _ring_of_values(first, order=order)
    if isinstance(first, NumberType):
        if len(args) < 2 or not isinstance(args[1], str):
            raise CasTypeError(
                "PolynomialRing() expects a variable string, like PolynomialRing(Q,'x,y')"
            )
        if not args[1].strip():
            raise EmptyInput("no variable names given")
        names = tuple(s.strip() for s in args[1].split(","))
        order = args[2] if len(args) > 2 else GRADED
        if len(args) > 3 or not isinstance(order, MonomialOrder):
            raise CasTypeError("the order must be 'lex' or 'graded'")
        for name in names:
            mk_symbol(name)  # validates the shape, raises BadSymbolName
        return Ring(first, names, order)
    raise CasTypeError(
        "PolynomialRing() expects (Q|Z, 'names'[, order]) or a list"
    )


def _bi_polynomial(env: Environment, v: Value) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    if not isinstance(v, _EXPRISH):
        raise CasTypeError(f"cannot convert {type_name(v)} to a polynomial")
    e = as_expr(v)
    return expr_to_poly(infer_ring([e]), e)


def make_global_env(auto_symbols: bool = True, implicit_mul: bool = False,
                    gb_hook=None) -> Environment:
    env = Environment(auto_symbols, implicit_mul, gb_hook)
    for name, fn in (
        ("symbols", _bi_symbols),
        ("groebner", _bi_groebner),
        ("ideal", _bi_ideal),
        ("PolynomialRing", _bi_polynomial_ring),
        ("Polynomial", _bi_polynomial),
    ):
        env.bind(name, BuiltinFn(name, fn))
    env.bind("lex", LEX)
    env.bind("graded", GRADED)
    env.bind("Q", NumberType.RAT)
    env.bind("Z", NumberType.INT)
    return env


# display

def format_value(v: Value) -> str:
    if isinstance(v, bool):
        return str(v)
    if isinstance(v, (int, Fraction)):
        return format_number(v)
    if isinstance(v, Sym):
        return v.name
    if isinstance(v, Expr):
        return to_string(v)
    if isinstance(v, (Polynomial, Ring, Ideal)):
        return str(v)
    if isinstance(v, Lex):
        return "lex"
    if isinstance(v, Graded):
        return "graded"
    if isinstance(v, Elim):
        return f"elim({v.block})"
    if isinstance(v, NumberType):
        return "Q" if v is NumberType.RAT else "Z"
    if isinstance(v, list):
        return f"[{', '.join(format_value(x) for x in v)}]"
    if isinstance(v, str):
        return f"'{v}'"
    if isinstance(v, BuiltinFn):
        return f"<builtin {v.name}>"
    return str(v)


def type_name(v: Value) -> str:
    if isinstance(v, bool):
        return "boolean"
    if isinstance(v, (int, Fraction)):
        return "number"
    if isinstance(v, Sym):
        return "symbol"
    if isinstance(v, Expr):
        return "expression"
    if isinstance(v, Polynomial):
        return "polynomial"
    if isinstance(v, Ring):
        return "ring"
    if isinstance(v, Ideal):
        return "ideal"
    if isinstance(v, MonomialOrder):
        return "order"
    if isinstance(v, NumberType):
        return "domain"
    if isinstance(v, list):
        return "list"
    if isinstance(v, str):
        return "string"
    if isinstance(v, BuiltinFn):
        return "builtin"
    return type(v).__name__
