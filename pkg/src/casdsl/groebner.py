"""Polynomial reduction, Buchberger completion, and ideal operations.

Everything here is deterministic so that reduced bases are reproducible
verbatim: critical pairs are processed in ascending lcm order (normal
strategy, ties broken by pair index), division always picks the first
matching divisor, and the finished basis is monic, inter-reduced and
sorted descending by leading term.  Reduced Groebner bases are unique
per ideal, ring and order, which is what makes the output test-stable.

Coefficients must form a field, so anything entering a basis
computation is promoted to Q first.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyInput, RingMismatch, ZeroOperand
from .numeric import NumberType, normalize
from .polynomials import (
    Elim,
    Polynomial,
    Ring,
    join_ring,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    re_embed,
)

# Auxiliary elimination variable; unlexable on purpose, so it can never
# capture a user symbol.
ELIM_VARIABLE = "#t"


@dataclass
class GBStats:
    """Pair-count telemetry, surfaced by the CLI's --debug-gb flag."""

    pairs_considered: int = 0
    pairs_skipped_coprime: int = 0
    reductions_to_zero: int = 0
    basis_additions: int = 0

    def summary(self) -> str:
        return (
            f"pairs={self.pairs_considered}"
            f" coprime-skips={self.pairs_skipped_coprime}"
            f" zero-reductions={self.reductions_to_zero}"
            f" additions={self.basis_additions}"
        )


def _require_common_ring(polys) -> Ring:
    rings = {p.ring for p in polys}
    if len(rings) != 1:
        raise RingMismatch("polynomials live in different rings")
    return next(iter(rings))


def _coeff_div(a, b):
    return normalize(Fraction(a) / Fraction(b))


def poly_divmod(p: Polynomial, divisors) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division: returns (quotients, remainder).

    The remainder has no term divisible by any divisor's leading
    monomial, and p == sum(q_i * g_i) + r holds exactly.  The whole
    polynomial is reduced, not just its head, so the remainder is the
    canonical normal form for the given divisor list.
    """
    divisors = list(divisors)
    if divisors:
        _require_common_ring([p, *divisors])
    ring = p.ring
    active = [(i, g) for i, g in enumerate(divisors) if g]
    quotients = [ring.zero() for _ in divisors]
    remainder = ring.zero()
    work = p
    while work:
        lm, lc = work.leading_monomial, work.leading_coeff
        for i, g in active:
            if mono_divides(g.leading_monomial, lm):
                qc = _coeff_div(lc, g.leading_coeff)
                qm = mono_div(lm, g.leading_monomial)
                quotients[i] = quotients[i] + Polynomial(ring, {qm: qc})
                work = work - g.mul_term(qc, qm)
                break
        else:
            head = Polynomial(ring, {lm: lc})
            remainder = remainder + head
            work = work - head
    return quotients, remainder


def normal_form(p: Polynomial, divisors) -> Polynomial:
    return poly_divmod(p, divisors)[1]


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """lcm(lt f, lt g)/lt(f) * f  -  lcm(lt f, lt g)/lt(g) * g."""
    if not f or not g:
        raise ZeroOperand("s-polynomial of the zero polynomial")
    _require_common_ring([f, g])
    lcm = mono_lcm(f.leading_monomial, g.leading_monomial)
    left = f.mul_term(_coeff_div(1, f.leading_coeff), mono_div(lcm, f.leading_monomial))
    right = g.mul_term(_coeff_div(1, g.leading_coeff), mono_div(lcm, g.leading_monomial))
    return left - right


def buchberger(gens, order=None, stats: GBStats | None = None) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pair completion with Buchberger's coprime-leading-term criterion,
    followed by minimalization, inter-reduction and monic scaling.
    Inputs are re-embedded into a Q-ring (re-sorted under ``order`` when
    given) before anything runs.
    """
    gens = list(gens)
    if not gens:
        raise EmptyInput("no generators")
    ring = _require_common_ring(gens)
    target = Ring(NumberType.RAT, ring.variables, order or ring.order)
    if target != ring:
        gens = [re_embed(g, target) for g in gens]
    if stats is None:
        stats = GBStats()

    basis = [g.monic() for g in gens if g]
    if not basis:
        return []
    key = target.order.key
    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}

    def pair_rank(pair):
        i, j = pair
        lcm = mono_lcm(basis[i].leading_monomial, basis[j].leading_monomial)
        return (key(lcm), pair)

    while pairs:
        i, j = min(pairs, key=pair_rank)
        pairs.remove((i, j))
        stats.pairs_considered += 1
        lm_i = basis[i].leading_monomial
        lm_j = basis[j].leading_monomial
        if mono_lcm(lm_i, lm_j) == mono_mul(lm_i, lm_j):
            stats.pairs_skipped_coprime += 1
            continue
        remainder = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if not remainder:
            stats.reductions_to_zero += 1
            continue
        basis.append(remainder.monic())
        stats.basis_additions += 1
        pairs.update((k, len(basis) - 1) for k in range(len(basis) - 1))

    return _reduce_basis(basis, key)


def _reduce_basis(basis, key) -> list[Polynomial]:
    # minimal: ascending by leading monomial, keep only irreducible heads
    minimal: list[Polynomial] = []
    for g in sorted(basis, key=lambda g: key(g.leading_monomial)):
        if not any(
            mono_divides(h.leading_monomial, g.leading_monomial) for h in minimal
        ):
            minimal.append(g)
    # inter-reduce the tails; leading monomials are already pairwise
    # irreducible so every normal form keeps its head
    reduced: list[Polynomial] = []
    for i, g in enumerate(minimal):
        others = reduced + minimal[i + 1 :]
        reduced.append(normal_form(g, others).monic())
    reduced.sort(key=lambda g: key(g.leading_monomial), reverse=True)
    return reduced


class Ideal:
    """Generators over a fixed Q-ring plus a lazily cached reduced basis."""

    __slots__ = ("ring", "generators", "_basis")

    def __init__(self, ring: Ring, generators):
        if ring.domain is not NumberType.RAT:
            ring = Ring(NumberType.RAT, ring.variables, ring.order)
        self.ring = ring
        self.generators: tuple[Polynomial, ...] = tuple(
            re_embed(g, ring) for g in generators
        )
        self._basis: tuple[Polynomial, ...] | None = None

    @classmethod
    def from_reduced_basis(cls, ring: Ring, basis) -> Ideal:
        ideal = cls(ring, basis)
        ideal._basis = ideal.generators
        return ideal

    def reduced_basis(self, stats: GBStats | None = None) -> tuple[Polynomial, ...]:
        if self._basis is None:
            nonzero = [g for g in self.generators if g]
            if nonzero:
                self._basis = tuple(buchberger(nonzero, stats=stats))
            else:
                self._basis = ()
        return self._basis

    def contains(self, p: Polynomial, stats: GBStats | None = None) -> bool:
        p = re_embed(p, self.ring)
        basis = self.reduced_basis(stats)
        if not basis:
            return not p
        return not normal_form(p, basis)

    def intersect(self, other: Ideal, stats: GBStats | None = None) -> Ideal:
        return ideal_intersect(self, other, stats)

    def __str__(self):
        return f"ideal({', '.join(str(g) for g in self.generators)})"

    def __repr__(self):
        return f"<{self} over {self.ring}>"


def ideal_membership(p: Polynomial, ideal: Ideal) -> bool:
    return ideal.contains(p)


def ideal_intersect(left: Ideal, right: Ideal, stats: GBStats | None = None) -> Ideal:
    """Intersection by elimination: with a fresh greatest variable t,
    the t-free part of a Groebner basis of t*I + (1-t)*J generates
    the intersection.  Ideals in different rings are unified first."""
    if left.ring == right.ring:
        ring = left.ring
    else:
        ring = join_ring(left.ring, right.ring)
    gens_l = [re_embed(f, ring) for f in left.generators if f]
    gens_r = [re_embed(g, ring) for g in right.generators if g]
    if not gens_l or not gens_r:
        return Ideal(ring, ())

    ext = Ring(NumberType.RAT, (ELIM_VARIABLE,) + ring.variables, Elim(1))
    t = ext.variable(ELIM_VARIABLE)
    one = ext.one()
    mixed = [t * re_embed(f, ext) for f in gens_l]
    mixed += [(one - t) * re_embed(g, ext) for g in gens_r]
    basis = buchberger(mixed, stats=stats)
    kept = [
        re_embed(b, ring)
        for b in basis
        if all(m[0] == 0 for m, _ in b.terms)
    ]
    return Ideal(ring, kept)
