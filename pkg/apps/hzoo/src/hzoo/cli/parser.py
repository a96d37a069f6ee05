"""Textual polynomial format.

Grammar:
    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := '(' expr ')' | rational | var | '-' factor
    rational := int ('/' uint)?
    var      := 'x' uint

Implicit multiplication is rejected. Offsets in errors are byte offsets into
the UTF-8 source.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from hzoo.core.config import MAX_COEFFICIENT_DIGITS, MAX_PARSE_DEPTH, MAX_PARSE_EXPONENT
from hzoo.core.errors import ParseError
from hzoo.core.polyring import Poly
from hzoo.core.printing import pretty

__all__ = ["BinOp", "ExprAst", "Neg", "Num", "Pow", "Var", "lower", "parse", "parse_poly", "pretty"]

_WHITESPACE = b" \t\r\n"
_PUNCT = {ord(c): c for c in "+-*^/()"}
_DIGITS = b"0123456789"
_MAX_DIGITS = MAX_COEFFICIENT_DIGITS
# every accepted literal fits; anything this size still prints under the int-to-str limit
_MAX_BITS = math.ceil(MAX_COEFFICIENT_DIGITS * math.log2(10))
END = "end of input"


#### AST ####


@dataclass(frozen=True)
class Var:
    index: int  # 0-based


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Neg:
    operand: "ExprAst"


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-' or '*'
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Pow:
    base: "ExprAst"
    exponent: int


ExprAst = Union[Var, Num, Neg, BinOp, Pow]


#### Tokenizer ####


class Token(NamedTuple):
    kind: str  # 'int', 'var', 'end' or the punctuation character itself
    value: int
    offset: int


def _read_digits(data: bytes, start: int) -> tuple[int, int]:
    end = start
    while end < len(data) and data[end] in _DIGITS:
        end += 1
    if end - start > _MAX_DIGITS:
        raise ParseError(start, {"integer"}, "literal too long")
    return int(data[start:end]), end


def tokenize(data: bytes) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(data):
        c = data[pos]
        if c in _WHITESPACE:
            pos += 1
        elif c in _DIGITS:
            value, end = _read_digits(data, pos)
            tokens.append(Token("int", value, pos))
            pos = end
        elif c == ord("x"):
            if pos + 1 >= len(data) or data[pos + 1] not in _DIGITS:
                raise ParseError(pos + 1, {"variable index"})
            value, end = _read_digits(data, pos + 1)
            tokens.append(Token("var", value, pos))
            pos = end
        elif c in _PUNCT:
            tokens.append(Token(_PUNCT[c], 0, pos))
            pos += 1
        else:
            raise ParseError(pos, {"'('", "'-'", "integer", "variable", "operator"}, f"unexpected byte 0x{c:02x}")
    tokens.append(Token("end", 0, len(data)))
    return tokens


#### Recursive descent ####


class _Parser:
    def __init__(self, tokens: list[Token], arity: int):
        self.tokens = tokens
        self.arity = arity
        self.pos = 0
        self.depth = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _enter(self, token: Token) -> None:
        self.depth += 1
        if self.depth > MAX_PARSE_DEPTH:
            raise ParseError(token.offset, {"shallower expression"}, f"nesting deeper than {MAX_PARSE_DEPTH}")

    def _uint(self) -> Token:
        if self.current.kind != "int":
            raise ParseError(self.current.offset, {"unsigned integer"})
        return self._advance()

    def parse(self) -> ExprAst:
        node = self.expr()
        if self.current.kind != "end":
            raise ParseError(self.current.offset, {"'+'", "'-'", "'*'", "'^'", END})
        return node

    def expr(self) -> ExprAst:
        node = self.term()
        while self.current.kind in ("+", "-"):
            op = self._advance().kind
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> ExprAst:
        node = self.factor()
        while self.current.kind == "*":
            self._advance()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> ExprAst:
        node = self.base()
        if self.current.kind == "^":
            self._advance()
            exponent = self._uint()
            if exponent.value > MAX_PARSE_EXPONENT:
                raise ParseError(exponent.offset, {f"exponent <= {MAX_PARSE_EXPONENT}"})
            node = Pow(node, exponent.value)
        return node

    def base(self) -> ExprAst:
        token = self.current
        if token.kind == "(":
            self._enter(token)
            self._advance()
            node = self.expr()
            if self.current.kind != ")":
                raise ParseError(self.current.offset, {"')'", "'+'", "'-'", "'*'", "'^'"})
            self._advance()
            self.depth -= 1
            return node
        if token.kind == "-":
            self._enter(token)
            self._advance()
            node = Neg(self.factor())
            self.depth -= 1
            return node
        if token.kind == "int":
            self._advance()
            if self.current.kind != "/":
                return Num(Fraction(token.value))
            self._advance()
            den = self._uint()
            if den.value == 0:
                raise ParseError(den.offset, {"nonzero denominator"})
            return Num(Fraction(token.value, den.value))
        if token.kind == "var":
            if not 1 <= token.value <= self.arity:
                raise ParseError(
                    token.offset,
                    {f"variable x1..x{self.arity}"} if self.arity else {"constant"},
                    f"unknown variable x{token.value}",
                )
            self._advance()
            return Var(token.value - 1)
        raise ParseError(token.offset, {"'('", "'-'", "integer", "variable"})


def parse(src: str | bytes, arity: int) -> ExprAst:
    """Parse polynomial text in variables x1..x_arity, raising ParseError on bad input."""
    data = src.encode("utf-8") if isinstance(src, str) else bytes(src)
    return _Parser(tokenize(data), arity).parse()


#### Lowering ####


def _flatten(node: BinOp) -> tuple[ExprAst, list[tuple[str, ExprAst]]]:
    # walk a left-nested chain of one precedence level without recursion
    group = ("+", "-") if node.op in ("+", "-") else ("*",)
    chain = []
    while isinstance(node, BinOp) and node.op in group:
        chain.append((node.op, node.right))
        node = node.left
    chain.reverse()
    return node, chain


def _coefficient_bits(p: Poly) -> int:
    return max(
        (max(c.numerator.bit_length(), c.denominator.bit_length()) for c in p.terms.values()),
        default=0,
    )


def _too_large() -> ParseError:
    # the AST carries no positions, so size errors point at byte 0
    return ParseError(0, {"smaller coefficients"}, f"coefficient exceeds {MAX_COEFFICIENT_DIGITS} digits")


def _bounded(p: Poly) -> Poly:
    if _coefficient_bits(p) > _MAX_BITS:
        raise _too_large()
    return p


def lower(ast: ExprAst, arity: int) -> Poly:
    """Exact polynomial denoted by the AST.

    Raises ParseError when a coefficient grows past MAX_COEFFICIENT_DIGITS.
    """
    if isinstance(ast, Var):
        return Poly.variable(ast.index, arity)
    if isinstance(ast, Num):
        return Poly.constant(ast.value, arity)
    if isinstance(ast, Neg):
        return -lower(ast.operand, arity)
    if isinstance(ast, Pow):
        base = lower(ast.base, arity)
        if (_coefficient_bits(base) - 1) * ast.exponent > _MAX_BITS:
            raise _too_large()
        return _bounded(base**ast.exponent)
    head, chain = _flatten(ast)
    result = lower(head, arity)
    for op, operand in chain:
        value = lower(operand, arity)
        if op == "+":
            result = result + value
        elif op == "-":
            result = result - value
        else:
            result = result * value
        result = _bounded(result)
    return result


def parse_poly(src: str | bytes, arity: int) -> Poly:
    return lower(parse(src, arity), arity)
