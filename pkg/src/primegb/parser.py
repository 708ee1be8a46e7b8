"""Polynomial text: parsing, rendering and system files.

Grammar, loosest binding first::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | "+" unary | power
    power  := atom ("^" INT)?
    atom   := INT ("/" INT)? | "x" INT | "(" expr ")"

Multiplication must be written out; ``2x0`` is rejected.

A system file starts with a ``vars: <n>`` line and holds one polynomial per
line. ``#`` starts a comment, blank lines are skipped.
"""
from __future__ import annotations

import re
from fractions import Fraction
from os import PathLike
from pathlib import Path
from typing import Iterable, NamedTuple, Union

import attrs
from exceptiongroup import ExceptionGroup

from .errors import (
    NegativeExponent,
    PolynomialSyntaxError,
    PrimeGBError,
    UndefinedVariable,
)
from .monomial import VarContext
from .polynomial import Polynomial, Term
from .validator import _positive_validator

__all__ = [
    "SystemFile",
    "parse_polynomial",
    "render_polynomial",
    "render_term",
    "parse_system",
    "load_system",
    "render_system",
]

_TOKEN = re.compile(r"(?P<num>\d+)|(?P<var>x\d+)|(?P<op>[-+*/^()])")
_HEADER = re.compile(r"vars\s*:\s*(\d+)")


class _Token(NamedTuple):
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position == len(text):
            break
        match = _TOKEN.match(text, position)
        if match is None or match.lastgroup is None:
            raise PolynomialSyntaxError(
                f"unexpected character {text[position]!r}", text, position
            )
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: VarContext) -> None:
        self.text = text
        self.ctx = ctx
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def _error(self, message: str) -> PolynomialSyntaxError:
        return PolynomialSyntaxError(message, self.text, self.current.position)

    def _accept(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.text == op:
            self.index += 1
            return True
        return False

    def _expect_int(self) -> int:
        token = self.current
        if token.kind != "num":
            raise self._error("expected an integer")
        self.index += 1
        return int(token.text)

    def parse(self) -> Polynomial:
        result = self._expr()
        if self.current.kind != "end":
            raise self._error(f"unexpected {self.current.text!r}")
        return result

    def _expr(self) -> Polynomial:
        result = self._term()
        while True:
            if self._accept("+"):
                result = result + self._term()
            elif self._accept("-"):
                result = result - self._term()
            else:
                return result

    def _term(self) -> Polynomial:
        result = self._unary()
        while self._accept("*"):
            result = result * self._unary()
        return result

    def _unary(self) -> Polynomial:
        if self._accept("-"):
            return -self._unary()
        if self._accept("+"):
            return self._unary()
        return self._power()

    def _power(self) -> Polynomial:
        base = self._atom()
        if not self._accept("^"):
            return base
        if self.current.kind == "op" and self.current.text == "-":
            raise NegativeExponent(
                f"negative exponent at position {self.current.position}: "
                + repr(self.text)
            )
        return base ** self._expect_int()

    def _atom(self) -> Polynomial:
        token = self.current
        if token.kind == "num":
            self.index += 1
            value = Fraction(int(token.text))
            if self._accept("/"):
                position = self.current.position
                denominator = self._expect_int()
                if denominator == 0:
                    raise PolynomialSyntaxError("zero denominator", self.text, position)
                value /= denominator
            return Polynomial.constant(value, self.ctx)
        if token.kind == "var":
            index = int(token.text[1:])
            if index >= self.ctx.num_vars:
                raise UndefinedVariable(index, self.ctx.num_vars)
            self.index += 1
            return Polynomial.variable(index, self.ctx)
        if self._accept("("):
            result = self._expr()
            if not self._accept(")"):
                raise self._error("expected ')'")
            return result
        if token.kind == "end":
            raise self._error("unexpected end of input")
        raise self._error(f"unexpected {token.text!r}")


def parse_polynomial(text: str, ctx: VarContext) -> Polynomial:
    """Parse ``text`` into a canonical polynomial over ``ctx``.

    Raises
    ------
    PolynomialSyntaxError
        Malformed text; carries the 0-based ``position``.
    UndefinedVariable
        A variable index is not below ``ctx.num_vars``.
    NegativeExponent
        An exponent is negative.
    """
    return _Parser(text, ctx).parse()


def _render_unsigned(t: Term) -> str:
    coeff = abs(t.coeff)
    if t.mono.is_one:
        return str(coeff)
    if coeff == 1:
        return str(t.mono)
    return f"{coeff}*{t.mono}"


def render_term(t: Term) -> str:
    return ("-" if t.coeff < 0 else "") + _render_unsigned(t)


def render_polynomial(f: Polynomial) -> str:
    """``4*x1*x2 + 2*x0*x2 - 6`` style text, terms in canonical order."""
    if f.is_zero:
        return "0"
    parts = [render_term(f.terms[0])]
    for t in f.terms[1:]:
        parts.append(f" {'-' if t.coeff < 0 else '+'} {_render_unsigned(t)}")
    return "".join(parts)


@attrs.frozen(kw_only=True)
class SystemFile:
    num_vars: int = attrs.field(validator=_positive_validator)
    polynomials: tuple[Polynomial, ...] = attrs.field(converter=tuple)

    @property
    def ctx(self) -> VarContext:
        return VarContext(num_vars=self.num_vars)


def parse_system(text: str) -> SystemFile:
    """Parse a system file.

    Every bad polynomial line is reported: the errors are raised together as
    an ExceptionGroup, each carrying its 1-based ``line`` number.
    """
    ctx: VarContext | None = None
    polynomials: list[Polynomial] = []
    errors: list[PrimeGBError] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ctx is None:
            match = _HEADER.fullmatch(line)
            if match is None:
                raise PolynomialSyntaxError(
                    f"line {lineno}: expected a 'vars: <n>' header", line, 0
                )
            ctx = VarContext(num_vars=int(match.group(1)))
            continue
        try:
            polynomials.append(parse_polynomial(line, ctx))
        except PrimeGBError as e:
            e.line = lineno  # type: ignore[attr-defined]
            errors.append(e)
    if errors:
        raise ExceptionGroup(
            "Invalid system file"
            + str([f"line {e.line}: {e}" for e in errors]),  # type: ignore
            errors,
        )
    if ctx is None:
        raise ValueError("missing 'vars: <n>' header")
    if not polynomials:
        raise ValueError("the system holds no polynomial")
    return SystemFile(num_vars=ctx.num_vars, polynomials=polynomials)


def load_system(path: Union[str, "PathLike[str]"]) -> SystemFile:
    return parse_system(Path(path).read_text(encoding="utf-8-sig"))


def render_system(polynomials: Iterable[Polynomial], num_vars: int) -> str:
    lines = [f"vars: {num_vars}"]
    lines.extend(render_polynomial(f) for f in polynomials)
    return "\n".join(lines) + "\n"
