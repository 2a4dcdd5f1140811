"""Operator-precedence (Pratt) parser producing statement ASTs.

Precedence, loosest to tightest: ``+ -``, then ``* /`` (implicit
multiplication, when enabled, sits on this tier), unary ``-``, then
``** ^`` (right associative, and binding tighter than unary minus so
``-x^2`` is ``-(x^2)``), then postfix calls and method calls.  ``^``
and ``**`` are identified at parse time.  Statements are separated by
newlines or ``;``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError
from . import lexer
from .lexer import Token, tokenize

Pos = tuple[int, int]

_NOPOS: Pos = (0, 0)

ADD_BP = 10
MUL_BP = 20
NEG_BP = 25
POW_BP = 40

_BINDING = {"+": ADD_BP, "-": ADD_BP, "*": MUL_BP, "/": MUL_BP,
            "**": POW_BP, "^": POW_BP}


@dataclass(frozen=True)
class ExprAst:
    pass


@dataclass(frozen=True)
class IntLit(ExprAst):
    value: int
    pos: Pos = field(default=_NOPOS, compare=False)


@dataclass(frozen=True)
class StrLit(ExprAst):
    value: str
    pos: Pos = field(default=_NOPOS, compare=False)


@dataclass(frozen=True)
class Ident(ExprAst):
    name: str
    pos: Pos = field(default=_NOPOS, compare=False)


@dataclass(frozen=True)
class UnaryNeg(ExprAst):
    operand: ExprAst
    pos: Pos = field(default=_NOPOS, compare=False)


@dataclass(frozen=True)
class BinOp(ExprAst):
    op: str  # one of + - * / ** (power is canonicalized to **)
    left: ExprAst
    right: ExprAst
    pos: Pos = field(default=_NOPOS, compare=False)


@dataclass(frozen=True)
class ListLit(ExprAst):
    elements: tuple[ExprAst, ...]
    pos: Pos = field(default=_NOPOS, compare=False)


@dataclass(frozen=True)
class CallAst(ExprAst):
    name: str
    args: tuple[ExprAst, ...]
    pos: Pos = field(default=_NOPOS, compare=False)


@dataclass(frozen=True)
class MethodCall(ExprAst):
    receiver: ExprAst
    name: str
    args: tuple[ExprAst, ...]
    pos: Pos = field(default=_NOPOS, compare=False)


@dataclass(frozen=True)
class Stmt:
    pass


@dataclass(frozen=True)
class Assign(Stmt):
    target: str
    value: ExprAst
    pos: Pos = field(default=_NOPOS, compare=False)
    semi: bool = field(default=False, compare=False)


@dataclass(frozen=True)
class MultiAssign(Stmt):
    targets: tuple[str, ...]
    value: ExprAst
    pos: Pos = field(default=_NOPOS, compare=False)
    semi: bool = field(default=False, compare=False)


@dataclass(frozen=True)
class ExprStmt(Stmt):
    expr: ExprAst
    pos: Pos = field(default=_NOPOS, compare=False)
    semi: bool = field(default=False, compare=False)


_TERMINATORS = (lexer.NEWLINE, lexer.SEMI, lexer.EOF)
_ATOM_STARTERS = (lexer.INT_LIT, lexer.IDENT, lexer.LPAREN)


class _Parser:
    def __init__(self, tokens: list[Token], implicit_mul: bool = False):
        self.tokens = tokens
        self.i = 0
        self.implicit_mul = implicit_mul

    @property
    def cur(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != lexer.EOF:
            self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.cur
        if tok.kind != kind:
            raise ParseError(f"expected {what}, found {_describe(tok)}", tok.pos)
        return self.advance()

    # statements

    def parse_program(self) -> list[Stmt]:
        stmts: list[Stmt] = []
        while True:
            while self.cur.kind in (lexer.NEWLINE, lexer.SEMI):
                self.advance()
            if self.cur.kind == lexer.EOF:
                return stmts
            stmts.append(self.parse_statement())

    def parse_statement(self) -> Stmt:
        start = self.cur
        targets = self._assignment_targets()
        if targets is not None:
            value = self.parse_expression(0)
            semi = self._finish_statement()
            if len(targets) == 1:
                return Assign(targets[0], value, start.pos, semi)
            return MultiAssign(tuple(targets), value, start.pos, semi)
        expr = self.parse_expression(0)
        semi = self._finish_statement()
        return ExprStmt(expr, start.pos, semi)

    def _assignment_targets(self) -> list[str] | None:
        # lookahead for IDENT (, IDENT)* '='
        j = self.i
        toks = self.tokens
        if toks[j].kind != lexer.IDENT:
            return None
        names = [toks[j].text]
        j += 1
        while toks[j].kind == lexer.COMMA and toks[j + 1].kind == lexer.IDENT:
            names.append(toks[j + 1].text)
            j += 2
        if toks[j].kind != lexer.ASSIGN:
            return None
        self.i = j + 1
        return names

    def _finish_statement(self) -> bool:
        tok = self.cur
        if tok.kind not in _TERMINATORS:
            raise ParseError(
                f"expected end of statement, found {_describe(tok)}", tok.pos
            )
        if tok.kind != lexer.EOF:
            self.advance()
        return tok.kind == lexer.SEMI

    # expressions

    def parse_expression(self, rbp: int) -> ExprAst:
        left = self._nud(self.advance())
        return self._led_loop(left, rbp)

    def _led_loop(self, left: ExprAst, rbp: int) -> ExprAst:
        while True:
            tok = self.cur
            if tok.kind == lexer.OP:
                bp = _BINDING[tok.text]
                if bp <= rbp:
                    return left
                self.advance()
                if tok.text in ("**", "^"):
                    right = self.parse_expression(bp - 1)  # right associative
                    left = BinOp("**", left, right, tok.pos)
                else:
                    right = self.parse_expression(bp)
                    left = BinOp(tok.text, left, right, tok.pos)
            elif tok.kind == lexer.LPAREN:
                if isinstance(left, Ident):
                    self.advance()
                    args = self._arguments(lexer.RPAREN)
                    left = CallAst(left.name, args, tok.pos)
                elif self.implicit_mul and MUL_BP > rbp:
                    left = self._juxtapose(left, tok)
                else:
                    return left
            elif tok.kind == lexer.DOT:
                self.advance()
                name = self.expect(lexer.IDENT, "a method name")
                self.expect(lexer.LPAREN, "'('")
                args = self._arguments(lexer.RPAREN)
                left = MethodCall(left, name.text, args, tok.pos)
            elif (
                self.implicit_mul
                and MUL_BP > rbp
                and tok.kind in (lexer.INT_LIT, lexer.IDENT)
            ):
                if tok.kind == lexer.INT_LIT and isinstance(left, IntLit):
                    raise ParseError(
                        "juxtaposed integer literals (write '*' to multiply)",
                        tok.pos,
                    )
                left = self._juxtapose(left, tok)
            else:
                return left

    def _juxtapose(self, left: ExprAst, tok: Token) -> ExprAst:
        # implicit multiplication: parse the adjacent atom, then let
        # tighter operators (powers, calls) attach to it before multiplying
        right = self._led_loop(self._nud(self.advance()), MUL_BP)
        return BinOp("*", left, right, tok.pos)

    def _nud(self, tok: Token) -> ExprAst:
        if tok.kind == lexer.INT_LIT:
            return IntLit(int(tok.text), tok.pos)
        if tok.kind == lexer.STR_LIT:
            return StrLit(tok.text, tok.pos)
        if tok.kind == lexer.IDENT:
            return Ident(tok.text, tok.pos)
        if tok.kind == lexer.OP and tok.text == "-":
            return UnaryNeg(self.parse_expression(NEG_BP), tok.pos)
        if tok.kind == lexer.LPAREN:
            inner = self.parse_expression(0)
            self.expect(lexer.RPAREN, "')'")
            return inner
        if tok.kind == lexer.LBRACKET:
            elements = self._arguments(lexer.RBRACKET)
            return ListLit(elements, tok.pos)
        raise ParseError(f"expected an expression, found {_describe(tok)}", tok.pos)

    def _arguments(self, closing: str) -> tuple[ExprAst, ...]:
        args: list[ExprAst] = []
        if self.cur.kind != closing:
            args.append(self.parse_expression(0))
            while self.cur.kind == lexer.COMMA:
                self.advance()
                args.append(self.parse_expression(0))
        self.expect(closing, "')'" if closing == lexer.RPAREN else "']'")
        return tuple(args)


def _describe(tok: Token) -> str:
    if tok.kind == lexer.EOF:
        return "end of input"
    if tok.kind == lexer.NEWLINE:
        return "end of line"
    return f"{tok.text!r}"


def parse(tokens: list[Token], implicit_mul: bool = False) -> list[Stmt]:
    return _Parser(tokens, implicit_mul).parse_program()


def parse_source(
    src: str, implicit_mul: bool = False, start_line: int = 1
) -> list[Stmt]:
    return parse(tokenize(src, start_line), implicit_mul)


def parse_expr(src: str, implicit_mul: bool = False) -> ExprAst:
    """Parse a single expression (test convenience)."""
    stmts = parse_source(src, implicit_mul)
    if len(stmts) != 1 or not isinstance(stmts[0], ExprStmt):
        raise ParseError("expected a single expression", (1, 1))
    return stmts[0].expr
