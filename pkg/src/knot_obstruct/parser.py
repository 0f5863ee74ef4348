"""
Hand-written recursive descent parser for knot expressions.

Grammar (whitespace allowed between tokens)::

    sum  := term ('#' term)*
    term := ['-'] 'T' '(' INT ',' INT ')'
    INT  := [0-9]+

Error offsets are byte offsets into the UTF-8 encoded source.
"""
from __future__ import annotations

from .polycore import InvalidTorusKnot, KnotSum, TorusKnot


class ExpressionError(ValueError):
    def __init__(self, message: str, source: str, offset: int):
        self.source = source
        self.offset = offset
        self.message = message
        super().__init__(f"{message} at byte {offset}")

    def caret(self) -> str:
        """Two-line diagnostic pointing at the offending byte."""
        prefix = self.source.encode("utf-8")[: self.offset].decode("utf-8", errors="replace")
        return f"{self.source}\n{' ' * len(prefix)}^"


class ExpressionSyntaxError(ExpressionError):
    pass


class ExpressionValidationError(ExpressionError):
    pass


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def offset(self, pos: int | None = None) -> int:
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8"))

    def fail(self, msg: str, pos: int | None = None):
        raise ExpressionSyntaxError(msg, self.text, self.offset(pos))

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def expect(self, ch: str):
        got = self.peek()
        if got != ch:
            found = "end of input" if got is None else repr(got)
            self.fail(f"expected {ch!r}, found {found}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            self.fail("expected an integer")
        return int(self.text[start:self.pos])

    def term(self) -> TorusKnot:
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        self.skip_ws()
        start = self.pos
        self.expect("T")
        self.expect("(")
        p = self.integer()
        self.expect(",")
        q = self.integer()
        self.expect(")")
        try:
            return TorusKnot(p, q, sign)
        except InvalidTorusKnot as exc:
            raise ExpressionValidationError(str(exc), self.text, self.offset(start)) from None

    def parse(self) -> KnotSum:
        if self.peek() is None:
            self.fail("empty expression")
        terms = [self.term()]
        while self.peek() == "#":
            self.pos += 1
            terms.append(self.term())
        if self.peek() is not None:
            self.fail(f"unexpected {self.text[self.pos]!r}")
        return KnotSum(terms)


def parse(expr: str) -> KnotSum:
    """
    >>> str(parse("-T(3,4)#-T(4,5)#T(5,6)"))
    '-T(3,4) # -T(4,5) # T(5,6)'
    """
    return _Parser(expr).parse()


def render(K: KnotSum) -> str:
    return str(K)
