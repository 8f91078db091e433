"""Parser for rational-function literals.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" exponent)?
    exponent := ("-" | "+")? INT | "(" ("-" | "+")? INT ")"
    atom   := INT | VAR | "g" | "(" expr ")"

VAR is ``t`` by default; ``g`` is the generator of a non-prime constant
field.  Equations are written ``[a1,a2,a3,a4,a6]``.
"""
from __future__ import annotations

from .field import FqField
from .ratfunc import RatFunc


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.message = message
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}: {text!r}")


class _Parser:
    def __init__(self, text: str, F: FqField, variables: tuple[str, ...]):
        self.text = text
        self.F = F
        self.variables = variables
        self.pos = 0

    def error(self, msg: str, pos: int | None = None):
        raise ParseError(msg, self.text, self.pos if pos is None else pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse(self) -> RatFunc:
        value = self.expr()
        if self.peek():
            self.error(f"unexpected character {self.peek()!r}")
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while True:
            if self.take("+"):
                value = value + self.term()
            elif self.take("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> RatFunc:
        value = self.unary()
        while True:
            if self.take("*"):
                value = value * self.unary()
            elif self.take("/"):
                pos = self.pos
                rhs = self.unary()
                if rhs.is_zero():
                    self.error("division by zero", pos)
                value = value / rhs
            else:
                return value

    def unary(self) -> RatFunc:
        if self.take("-"):
            return -self.unary()
        if self.take("+"):
            return self.unary()
        return self.power()

    def exponent(self) -> int:
        paren = self.take("(")
        sign = 1
        if self.take("-"):
            sign = -1
        elif self.take("+"):
            pass
        e = sign * self.integer()
        if paren and not self.take(")"):
            self.error("expected ')'")
        return e

    def power(self) -> RatFunc:
        pos = self.pos
        base = self.atom()
        if self.take("^"):
            e = self.exponent()
            if e < 0 and base.is_zero():
                self.error("negative power of zero", pos)
            base = base ** e
        return base

    def atom(self) -> RatFunc:
        ch = self.peek()
        F = self.F
        if ch.isdigit():
            return RatFunc.from_int(F, self.integer())
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if not self.take(")"):
                self.error("expected ')'")
            return value
        if ch in self.variables:
            self.pos += 1
            return RatFunc.t(F)
        if ch == "g":
            if F.n == 1:
                self.error("'g' used over a prime field")
            self.pos += 1
            return RatFunc.const(F, F.gen)
        if not ch:
            self.error("unexpected end of input")
        self.error(f"unexpected character {ch!r}")


def parse_ratfunc(text: str, F: FqField, variables: tuple[str, ...] = ("t",)) -> RatFunc:
    return _Parser(text, F, variables).parse()


def parse_element(text: str, F: FqField) -> int:
    """A constant-field element literal (no variable allowed)."""
    value = _Parser(text, F, ()).parse()
    return value.constant_value()


def split_equation(text: str) -> list[tuple[int, str]]:
    """The five coefficient strings with their offsets in text."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError("equation must be written [a1,a2,a3,a4,a6]", text, 0)
    parts, depth, start = [], 0, 1
    for i, ch in enumerate(s[1:-1], start=1):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append((start, s[start:i]))
            start = i + 1
    parts.append((start, s[start:-1]))
    if len(parts) != 5:
        raise ParseError(f"expected 5 coefficients, found {len(parts)}", text, 0)
    out = []
    for offset, part in parts:
        if not part.strip():
            raise ParseError("empty coefficient", text, offset)
        out.append((offset, part))
    return out


def parse_coefficients(text: str, F: FqField, variables: tuple[str, ...] = ("t",)) -> list[RatFunc]:
    coeffs = []
    for offset, part in split_equation(text):
        try:
            coeffs.append(parse_ratfunc(part, F, variables))
        except ParseError as exc:
            raise ParseError(exc.message, text, offset + exc.pos) from None
    return coeffs
