"""Longest-match tokenizer for the surface language.

``**`` is one token, ``^`` another spelling of the same operator
(the parser identifies them).  Newlines are tokens because they
terminate statements; a backslash at end of line swallows the newline
so a statement can continue.  Positions are 1-based (line, column).
"""
from __future__ import annotations

from typing import NamedTuple

from .errors import LexError

INT_LIT = "INT_LIT"
STR_LIT = "STR_LIT"
IDENT = "IDENT"
OP = "OP"
LPAREN = "LPAREN"
RPAREN = "RPAREN"
LBRACKET = "LBRACKET"
RBRACKET = "RBRACKET"
COMMA = "COMMA"
DOT = "DOT"
ASSIGN = "ASSIGN"
SEMI = "SEMI"
NEWLINE = "NEWLINE"
EOF = "EOF"

_SINGLES = {
    "(": LPAREN,
    ")": RPAREN,
    "[": LBRACKET,
    "]": RBRACKET,
    ",": COMMA,
    ".": DOT,
    "=": ASSIGN,
    ";": SEMI,
}


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    col: int

    @property
    def pos(self) -> tuple[int, int]:
        return (self.line, self.col)


def _is_ident_start(c: str) -> bool:
    return c.isalpha() or c == "_"


def _is_ident_rest(c: str) -> bool:
    return c.isalnum() or c == "_"


def tokenize(src: str, start_line: int = 1) -> list[Token]:
    tokens: list[Token] = []
    i, n = 0, len(src)
    line, col = start_line, 1

    def emit(kind: str, text: str):
        tokens.append(Token(kind, text, line, col))

    while i < n:
        c = src[i]
        if c in " \t\r":
            i += 1
            col += 1
        elif c == "\\":
            j = i + 1
            if j < n and src[j] == "\r":
                j += 1
            if j < n and src[j] == "\n":
                i = j + 1
                line += 1
                col = 1
            else:
                raise LexError("unexpected character '\\'", (line, col))
        elif c == "\n":
            emit(NEWLINE, "\n")
            i += 1
            line += 1
            col = 1
        elif c.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            emit(INT_LIT, src[i:j])
            col += j - i
            i = j
        elif _is_ident_start(c):
            j = i
            while j < n and _is_ident_rest(src[j]):
                j += 1
            emit(IDENT, src[i:j])
            col += j - i
            i = j
        elif c in "'\"":
            j = i + 1
            while j < n and src[j] != c:
                if src[j] == "\n":
                    raise LexError("unterminated string literal", (line, col))
                j += 1
            if j >= n:
                raise LexError("unterminated string literal", (line, col))
            emit(STR_LIT, src[i + 1 : j])
            col += j + 1 - i
            i = j + 1
        elif c == "*":
            if i + 1 < n and src[i + 1] == "*":
                emit(OP, "**")
                i += 2
                col += 2
            else:
                emit(OP, "*")
                i += 1
                col += 1
        elif c in "+-/^":
            emit(OP, c)
            i += 1
            col += 1
        elif c in _SINGLES:
            emit(_SINGLES[c], c)
            i += 1
            col += 1
        else:
            raise LexError(f"unexpected character {c!r}", (line, col))

    tokens.append(Token(EOF, "", line, col))
    return tokens
