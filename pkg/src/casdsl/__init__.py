"""casdsl: a small scripting language for exact computer algebra.

Symbolic expressions with suppressed evaluation, exact rational
arithmetic, polynomial rings with lex/graded orders, Groebner bases and
ideal intersection, all reachable from a ``cas>`` style REPL.
"""
from .errors import (
    ArityMismatch,
    BadSymbolName,
    CasError,
    CasNameError,
    CasTypeError,
    ConversionError,
    DemotionError,
    DivisionByZero,
    EmptyInput,
    LexError,
    ParseError,
    RingMismatch,
    UnsupportedExponent,
    ZeroOperand,
)
from .numeric import (
    Number,
    NumberType,
    format_number,
    most_general_number_type,
    normalize,
    num_binop,
    num_compare,
    promote,
)
from .symbolic import (
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
from .lexer import Token, tokenize
from .parser import parse, parse_expr, parse_source
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
    monomial_compare,
    most_general_number_type_of,
    re_embed,
)
from .groebner import (
    GBStats,
    Ideal,
    buchberger,
    ideal_intersect,
    ideal_membership,
    normal_form,
    poly_divmod,
    s_polynomial,
)
from .interpreter import (
    Environment,
    eval_expr,
    eval_stmt,
    format_value,
    make_global_env,
    resolve_identifier,
    value_binop,
)
from .cli import Session, SessionConfig, main, run_repl, run_script

__version__ = "0.1.0"
