"""Exception types shared across the whole stack.

Every error may carry a (line, column) position; the CLI renders
diagnostics as ``line:col: Kind: message``.
"""
from __future__ import annotations


class CasError(Exception):
    kind: str = "Error"

    def __init__(self, message: str, position: tuple[int, int] | None = None):
        super().__init__(message)
        self.message = message
        self.position = position

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if "kind" not in cls.__dict__:
            cls.kind = cls.__name__

    def diagnostic(self) -> str:
        if self.position is not None:
            line, col = self.position
            return f"{line}:{col}: {self.kind}: {self.message}"
        return f"{self.kind}: {self.message}"


class LexError(CasError):
    pass


class ParseError(CasError):
    pass


class BadSymbolName(CasError):
    pass


class DivisionByZero(CasError):
    pass


class UnsupportedExponent(CasError):
    pass


class DemotionError(CasError):
    pass


class ConversionError(CasError):
    pass


class RingMismatch(CasError):
    pass


class ArityMismatch(CasError):
    pass


class EmptyInput(CasError):
    pass


class ZeroOperand(CasError):
    pass


class CasNameError(CasError):
    kind = "NameError"


class CasTypeError(CasError):
    kind = "TypeError"
