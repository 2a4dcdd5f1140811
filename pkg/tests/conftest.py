"""Shared helpers: run source through the interpreter, random generators."""
from __future__ import annotations

import random
from fractions import Fraction

from casdsl.interpreter import eval_stmt, format_value, make_global_env
from casdsl.parser import parse_source
from casdsl.polynomials import GRADED, Polynomial, Ring
from casdsl.numeric import NumberType


def run_source(src: str, env=None, implicit_mul: bool = False,
               auto_symbols: bool = True):
    """Evaluate every statement; returns (values, env)."""
    if env is None:
        env = make_global_env(auto_symbols=auto_symbols, implicit_mul=implicit_mul)
    values = [
        eval_stmt(env, s) for s in parse_source(src, implicit_mul=env.implicit_mul)
    ]
    return values, env


def last_value(src: str, **kw):
    return run_source(src, **kw)[0][-1]


def printed(src: str, **kw) -> str:
    return format_value(last_value(src, **kw))


def random_poly(rng: random.Random, ring: Ring, max_degree: int = 3,
                max_terms: int = 4, allow_fractions: bool = True) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = [0] * ring.arity
        for _ in range(rng.randint(0, max_degree)):
            mono[rng.randrange(ring.arity)] += 1
        if sum(mono) > max_degree:
            continue
        if allow_fractions and ring.domain is NumberType.RAT and rng.random() < 0.3:
            coeff = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
        else:
            coeff = rng.randint(-5, 5)
        terms[tuple(mono)] = terms.get(tuple(mono), 0) + coeff
    return Polynomial(ring, terms)


def random_nonzero_poly(rng: random.Random, ring: Ring, **kw) -> Polynomial:
    while True:
        p = random_poly(rng, ring, **kw)
        if p:
            return p
