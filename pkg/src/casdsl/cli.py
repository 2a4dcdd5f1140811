"""Interactive REPL and script runner (the ``casdsl`` entry point).

Every statement echoes its value except an assignment terminated by
``;`` (so ``I = ideal( G ); J = ...`` stays quiet about I).  Errors
print as ``line:col: Kind: message``: the REPL keeps going, a script
stops with a nonzero exit.  A lone ``quit`` ends the session.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .errors import CasError
from .lexer import tokenize
from .parser import Assign, ExprStmt, Ident, MultiAssign, Stmt, parse
from .groebner import GBStats
from .interpreter import eval_stmt, format_value, make_global_env


@dataclass
class SessionConfig:
    auto_symbols: bool = True
    implicit_mul: bool = False
    prompt: str = "cas> "
    script_path: str | None = None
    debug_gb: bool = False


class Quit(Exception):
    pass


class Session:
    """One evaluation session; REPL and script mode share it, so both
    print exactly the same values for the same statements."""

    def __init__(self, config: SessionConfig, out=None, err=None):
        self.config = config
        self.out = out if out is not None else sys.stdout
        self.err = err if err is not None else sys.stderr
        hook = self._report_gb if config.debug_gb else None
        self.env = make_global_env(
            auto_symbols=config.auto_symbols,
            implicit_mul=config.implicit_mul,
            gb_hook=hook,
        )
        self.next_line = 1

    def _report_gb(self, label: str, stats: GBStats):
        print(f"gb[{label}]: {stats.summary()}", file=self.err)

    def execute(self, text: str):
        """Run a chunk of source; raises CasError/Quit to the caller."""
        start = self.next_line
        self.next_line += text.count("\n") + (0 if text.endswith("\n") else 1)
        tokens = tokenize(text, start_line=start)
        for stmt in parse(tokens, implicit_mul=self.config.implicit_mul):
            if self._is_quit(stmt):
                raise Quit()
            value = eval_stmt(self.env, stmt)
            if self._echoes(stmt):
                print(format_value(value), file=self.out)

    def _is_quit(self, stmt: Stmt) -> bool:
        return (
            isinstance(stmt, ExprStmt)
            and isinstance(stmt.expr, Ident)
            and stmt.expr.name == "quit"
            and self.env.lookup("quit") is None
        )

    @staticmethod
    def _echoes(stmt: Stmt) -> bool:
        if isinstance(stmt, (Assign, MultiAssign)):
            return not stmt.semi
        return True


def run_repl(config: SessionConfig, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    session = Session(config, out=stdout, err=stderr)
    interactive = getattr(stdin, "isatty", lambda: False)()

    def prompt():
        if interactive:
            stdout.write(config.prompt)
            stdout.flush()

    while True:
        prompt()
        line = stdin.readline()
        if not line:
            return 0
        # trailing backslash: keep reading, the lexer joins the lines
        while line.rstrip("\n").endswith("\\"):
            prompt()
            more = stdin.readline()
            if not more:
                break
            line += more
        try:
            session.execute(line)
        except Quit:
            return 0
        except CasError as err:
            print(err.diagnostic(), file=stderr)
    return 0


def run_script(config: SessionConfig, path: str,
               stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"casdsl: cannot read {path}: {exc.strerror}", file=stderr)
        return 1
    session = Session(config, out=stdout, err=stderr)
    try:
        session.execute(text)
    except Quit:
        return 0
    except CasError as err:
        print(err.diagnostic(), file=stderr)
        return 1
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="casdsl",
        description="A tiny scripting language for exact computer algebra.",
    )
    ap.add_argument("--script", metavar="FILE", help="run FILE instead of the REPL")
    ap.add_argument(
        "--no-auto-symbols",
        action="store_true",
        help="unbound names are errors instead of fresh symbols",
    )
    ap.add_argument(
        "--implicit-mul",
        action="store_true",
        help="juxtaposition multiplies: 2x means 2*x",
    )
    ap.add_argument(
        "--debug-gb",
        action="store_true",
        help="print critical-pair counts for every basis computation",
    )
    ns = ap.parse_args(argv)
    config = SessionConfig(
        auto_symbols=not ns.no_auto_symbols,
        implicit_mul=ns.implicit_mul,
        script_path=ns.script,
        debug_gb=ns.debug_gb,
    )
    if config.script_path is not None:
        return run_script(config, config.script_path)
    return run_repl(config)


if __name__ == "__main__":
    sys.exit(main())
