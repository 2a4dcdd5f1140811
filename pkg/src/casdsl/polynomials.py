"""Multivariate polynomials over Z and Q with pluggable monomial orders.

A monomial is an exponent vector (one entry per ring variable, the
first listed variable being the most significant), a polynomial a
sparse term list kept sorted descending under its ring's order, so the
leading term is always ``terms[0]``.  All values are immutable.

Orders: ``lex`` compares exponent vectors left to right; ``graded`` is
graded reverse lexicographic (total degree first, ties broken by the
last differing exponent with reversed sign); ``Elim(k)`` compares the
first k exponents lexicographically and falls back to graded on the
rest, which is what ideal elimination needs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ArityMismatch,
    BadSymbolName,
    ConversionError,
    DivisionByZero,
    EmptyInput,
    RingMismatch,
    UnsupportedExponent,
)
from .numeric import (
    Number,
    NumberType,
    format_number,
    most_general_number_type,
    normalize,
)
from .symbolic import (
    Binary,
    Call,
    Expr,
    Neg,
    NumberLeaf,
    SymbolLeaf,
    as_expr,
    to_string,
)

Mono = tuple[int, ...]


def mono_degree(m: Mono) -> int:
    return sum(m)


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Mono, b: Mono) -> Mono:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


class MonomialOrder:
    def key(self, m: Mono):
        raise NotImplementedError


@dataclass(frozen=True)
class Lex(MonomialOrder):
    def key(self, m: Mono):
        return m


@dataclass(frozen=True)
class Graded(MonomialOrder):
    def key(self, m: Mono):
        return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class Elim(MonomialOrder):
    block: int

    def key(self, m: Mono):
        rest = m[self.block :]
        return (m[: self.block], sum(rest), tuple(-e for e in reversed(rest)))


LEX = Lex()
GRADED = Graded()


def monomial_compare(order: MonomialOrder, m1: Mono, m2: Mono) -> int:
    if len(m1) != len(m2):
        raise ArityMismatch(f"monomial arities differ: {len(m1)} vs {len(m2)}")
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


@dataclass(frozen=True)
class Ring:
    domain: NumberType
    variables: tuple[str, ...]
    order: MonomialOrder = GRADED

    def __post_init__(self):
        seen = set()
        for name in self.variables:
            if not name:
                raise BadSymbolName("empty variable name")
            if name in seen:
                raise BadSymbolName(f"duplicate variable name {name!r}")
            seen.add(name)

    @property
    def arity(self) -> int:
        return len(self.variables)

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c: Number) -> Polynomial:
        return Polynomial(self, {(0,) * self.arity: c})

    def variable(self, name: str) -> Polynomial:
        i = self.variables.index(name)
        mono = tuple(1 if j == i else 0 for j in range(self.arity))
        return Polynomial(self, {mono: 1})

    def __str__(self):
        letter = "Q" if self.domain is NumberType.RAT else "Z"
        return f"{letter}[{','.join(self.variables)}]"


class Polynomial:
    """Sparse polynomial bound to a ring, terms sorted descending."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms):
        acc: dict[Mono, Number] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for mono, coeff in items:
            if len(mono) != ring.arity:
                raise ArityMismatch(
                    f"monomial arity {len(mono)} does not match {ring}"
                )
            c = normalize(acc.get(mono, 0) + coeff)
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
        for c in acc.values():
            if ring.domain is NumberType.INT and isinstance(c, Fraction):
                raise ConversionError(
                    f"coefficient {format_number(c)} is not in {ring}"
                )
        key = ring.order.key
        self.ring = ring
        self.terms: tuple[tuple[Mono, Number], ...] = tuple(
            sorted(acc.items(), key=lambda t: key(t[0]), reverse=True)
        )

    @classmethod
    def _raw(cls, ring: Ring, terms: tuple) -> Polynomial:
        # internal: terms already sorted, normalized and zero-free
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def leading_monomial(self) -> Mono:
        return self.terms[0][0]

    @property
    def leading_coeff(self) -> Number:
        return self.terms[0][1]

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(mono_degree(m) for m, _ in self.terms)

    def constant_value(self) -> Number | None:
        """The coefficient if this polynomial is constant, else None."""
        if not self.terms:
            return 0
        if len(self.terms) == 1 and mono_degree(self.terms[0][0]) == 0:
            return self.terms[0][1]
        return None

    def _require_same_ring(self, other: Polynomial):
        if self.ring != other.ring:
            raise RingMismatch(
                f"polynomials live in different rings: {self.ring} vs {other.ring}"
            )

    def __add__(self, other: Polynomial) -> Polynomial:
        self._require_same_ring(other)
        return self._merge(other, 1)

    def __sub__(self, other: Polynomial) -> Polynomial:
        self._require_same_ring(other)
        return self._merge(other, -1)

    def _merge(self, other: Polynomial, sign: int) -> Polynomial:
        key = self.ring.order.key
        a, b = self.terms, other.terms
        out: list[tuple[Mono, Number]] = []
        i = j = 0
        while i < len(a) and j < len(b):
            ma, ca = a[i]
            mb, cb = b[j]
            if ma == mb:
                c = normalize(ca + sign * cb)
                if c:
                    out.append((ma, c))
                i += 1
                j += 1
            elif key(ma) > key(mb):
                out.append((ma, ca))
                i += 1
            else:
                out.append((mb, normalize(sign * cb)))
                j += 1
        out.extend(a[i:])
        out.extend((m, normalize(sign * c)) for m, c in b[j:])
        return Polynomial._raw(self.ring, tuple(out))

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(
            self.ring, tuple((m, normalize(-c)) for m, c in self.terms)
        )

    def __mul__(self, other: Polynomial) -> Polynomial:
        self._require_same_ring(other)
        acc: dict[Mono, Number] = {}
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                m = mono_mul(ma, mb)
                acc[m] = acc.get(m, 0) + ca * cb
        return Polynomial(self.ring, acc)

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or isinstance(n, bool):
            raise UnsupportedExponent("polynomial exponent must be an integer")
        if n < 0:
            raise UnsupportedExponent("negative exponents are not supported")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c: Number) -> Polynomial:
        if c == 0:
            return self.ring.zero()
        terms = tuple((m, normalize(coeff * c)) for m, coeff in self.terms)
        if self.ring.domain is NumberType.INT:
            for _, coeff in terms:
                if isinstance(coeff, Fraction):
                    raise ConversionError(
                        f"coefficient {format_number(coeff)} is not in {self.ring}"
                    )
        return Polynomial._raw(self.ring, terms)

    def mul_term(self, c: Number, mono: Mono) -> Polynomial:
        """Multiply by the term c*mono (order-preserving, used by division)."""
        if c == 0:
            return self.ring.zero()
        return Polynomial._raw(
            self.ring,
            tuple((mono_mul(m, mono), normalize(coeff * c)) for m, coeff in self.terms),
        )

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        lc = self.leading_coeff
        if lc == 1:
            return self
        return self.scale(normalize(Fraction(1) / Fraction(lc)))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.terms))

    def _mono_str(self, mono: Mono) -> str:
        parts = []
        for name, e in zip(self.ring.variables, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for mono, coeff in self.terms:
            sign = "-" if coeff < 0 else "+"
            mag = -coeff if coeff < 0 else coeff
            mstr = self._mono_str(mono)
            if not mstr:
                body = format_number(mag)
            elif mag == 1:
                body = mstr
            else:
                body = f"{format_number(mag)}*{mstr}"
            chunks.append(sign + body)
        text = "".join(chunks)
        return text[1:] if text.startswith("+") else text

    def __repr__(self):
        return f"<{self} in {self.ring}>"


# Ring inference from expression trees.

def collect_symbols(e) -> tuple[str, ...]:
    """All symbol names occurring anywhere in ``e``, sorted ascending."""
    names: set[str] = set()

    def walk(node: Expr):
        if isinstance(node, SymbolLeaf):
            names.add(node.sym.name)
        elif isinstance(node, Neg):
            walk(node.operand)
        elif isinstance(node, Binary):
            walk(node.left)
            walk(node.right)
        elif isinstance(node, Call):
            for a in node.args:
                walk(a)

    walk(as_expr(e))
    return tuple(sorted(names))


def most_general_number_type_of(e) -> NumberType:
    """RAT as soon as a rational literal or a division occurs, else INT.

    Trees are numerically folded, so a division of two literals has
    already collapsed into a (possibly rational) number leaf; any
    surviving ``/`` node has a symbolic side and lands in Q as well.
    """

    def walk(node: Expr) -> bool:
        if isinstance(node, NumberLeaf):
            return isinstance(node.value, Fraction)
        if isinstance(node, Neg):
            return walk(node.operand)
        if isinstance(node, Binary):
            return node.op == "/" or walk(node.left) or walk(node.right)
        if isinstance(node, Call):
            return any(walk(a) for a in node.args)
        return False

    return NumberType.RAT if walk(as_expr(e)) else NumberType.INT


def infer_ring(exprs, order: MonomialOrder = GRADED) -> Ring:
    """Smallest ring containing every expression: union of symbols
    (ascending), join of coefficient domains."""
    exprs = list(exprs)
    if not exprs:
        raise EmptyInput("cannot infer a ring from no expressions")
    names: set[str] = set()
    domain = NumberType.INT
    for e in exprs:
        e = as_expr(e)
        names.update(collect_symbols(e))
        domain = most_general_number_type(domain, most_general_number_type_of(e))
    return Ring(domain, tuple(sorted(names)), order)


def join_ring(r1: Ring, r2: Ring, order: MonomialOrder | None = None) -> Ring:
    """Smallest common ring of two rings; the left order wins by default."""
    variables = tuple(sorted(set(r1.variables) | set(r2.variables)))
    domain = most_general_number_type(r1.domain, r2.domain)
    return Ring(domain, variables, order or r1.order)


def expr_to_poly(ring: Ring, e) -> Polynomial:
    """Image of an expression in ``ring``; the engine behind valueOf.

    Rejected with ConversionError: symbols outside the ring, rational
    content in a Z-ring, non-constant denominators, exponents that are
    not nonnegative integer literals, function calls.
    """
    e = as_expr(e)
    if isinstance(e, NumberLeaf):
        if ring.domain is NumberType.INT and isinstance(e.value, Fraction):
            raise ConversionError(
                f"coefficient {format_number(e.value)} is not in {ring}"
            )
        return ring.constant(e.value)
    if isinstance(e, SymbolLeaf):
        if e.sym.name not in ring.variables:
            raise ConversionError(
                f"symbol '{e.sym.name}' is not a variable of {ring}"
            )
        return ring.variable(e.sym.name)
    if isinstance(e, Neg):
        return -expr_to_poly(ring, e.operand)
    if isinstance(e, Binary):
        if e.op == "+":
            return expr_to_poly(ring, e.left) + expr_to_poly(ring, e.right)
        if e.op == "-":
            return expr_to_poly(ring, e.left) - expr_to_poly(ring, e.right)
        if e.op == "*":
            return expr_to_poly(ring, e.left) * expr_to_poly(ring, e.right)
        if e.op == "/":
            divisor = expr_to_poly(ring, e.right)
            c = divisor.constant_value()
            if c is None:
                raise ConversionError(
                    f"non-constant denominator in '{to_string(e)}'"
                )
            if c == 0:
                raise DivisionByZero("division by zero")
            return expr_to_poly(ring, e.left).scale(
                normalize(Fraction(1) / Fraction(c))
            )
        if e.op == "**":
            if not isinstance(e.right, NumberLeaf):
                raise ConversionError(f"symbolic exponent in '{to_string(e)}'")
            n = e.right.value
            if not isinstance(n, int):
                raise ConversionError(f"non-integer exponent in '{to_string(e)}'")
            if n < 0:
                raise ConversionError(f"negative exponent in '{to_string(e)}'")
            return expr_to_poly(ring, e.left) ** n
    if isinstance(e, Call):
        raise ConversionError(
            f"function call '{to_string(e)}' has no polynomial form"
        )
    raise ConversionError(f"cannot convert '{to_string(e)}' to a polynomial")


def re_embed(p: Polynomial, ring: Ring) -> Polynomial:
    """Map a polynomial into another ring by variable name.

    Source variables actually used must exist in the target; variables
    with zero exponent everywhere may be dropped (how elimination
    results return to the original ring).
    """
    if p.ring == ring:
        return p
    targets: list[int | None] = [
        ring.variables.index(v) if v in ring.variables else None
        for v in p.ring.variables
    ]
    acc: dict[Mono, Number] = {}
    for mono, coeff in p.terms:
        exps = [0] * ring.arity
        for i, e in enumerate(mono):
            if e == 0:
                continue
            t = targets[i]
            if t is None:
                raise ConversionError(
                    f"variable '{p.ring.variables[i]}' is not a variable of {ring}"
                )
            exps[t] = e
        acc[tuple(exps)] = coeff
    return Polynomial(ring, acc)
