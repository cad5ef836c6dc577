"""A tiny arithmetic expression language over one variable.

Supported syntax: decimal literals, one designated variable name, unary
minus, the binary operators ``+ - * / ^`` (with ``^`` right-associative
and binding tighter than unary minus), parentheses, and the functions
``abs``, ``sqrt``, ``ln``, ``exp`` (unary) and ``min``, ``max`` (binary).

Parsing is recursive descent over a flat token list.  Failures raise
:class:`ParseError` with a 0-based character position; evaluation
failures raise :class:`EvalError` carrying the offending subexpression
in printed form.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

from .errors import EvalError, ParseError

__all__ = [
    "Num",
    "Var",
    "Neg",
    "BinOp",
    "Call",
    "ExprAst",
    "parse_expr",
    "eval_expr",
    "format_expr",
]

FUNCTIONS = {"abs": 1, "sqrt": 1, "ln": 1, "exp": 1, "min": 2, "max": 2}


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: "ExprAst"


@dataclass(frozen=True)
class BinOp:
    op: str
    lhs: "ExprAst"
    rhs: "ExprAst"


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple["ExprAst", ...]


ExprAst = Union[Num, Var, Neg, BinOp, Call]

_NUMBER = re.compile(r"(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


@dataclass(frozen=True)
class _Token:
    kind: str  # "num" | "ident" | "op" | "lparen" | "rparen" | "comma" | "end"
    text: str
    pos: int
    value: float = 0.0


def _tokenize(src: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit() or ch == ".":
            m = _NUMBER.match(src, i)
            if m is None:
                raise ParseError(f"malformed number starting with '{ch}'", i)
            tokens.append(_Token("num", m.group(0), i, float(m.group(0))))
            i = m.end()
            continue
        if ch.isalpha() or ch == "_":
            m = _IDENT.match(src, i)
            tokens.append(_Token("ident", m.group(0), i))
            i = m.end()
            continue
        if ch in "+-*/^":
            tokens.append(_Token("op", ch, i))
        elif ch == "(":
            tokens.append(_Token("lparen", ch, i))
        elif ch == ")":
            tokens.append(_Token("rparen", ch, i))
        elif ch == ",":
            tokens.append(_Token("comma", ch, i))
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
        i += 1
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], variable: str):
        self.tokens = tokens
        self.pos = 0
        self.variable = variable

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {what}", tok.pos)
        return self.advance()

    # expr := term (('+'|'-') term)*
    def expr(self) -> ExprAst:
        node = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    # term := factor (('*'|'/') factor)*
    def term(self) -> ExprAst:
        node = self.factor()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.advance().text
            node = BinOp(op, node, self.factor())
        return node

    # factor := '-' factor | power        (unary minus binds looser than '^')
    def factor(self) -> ExprAst:
        if self.peek().kind == "op" and self.peek().text == "-":
            self.advance()
            return Neg(self.factor())
        return self.power()

    # power := atom ('^' factor)?         (right-associative)
    def power(self) -> ExprAst:
        node = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.advance()
            return BinOp("^", node, self.factor())
        return node

    def atom(self) -> ExprAst:
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            return Num(tok.value)
        if tok.kind == "lparen":
            self.advance()
            node = self.expr()
            self.expect("rparen", "')'")
            return node
        if tok.kind == "ident":
            self.advance()
            if tok.text in FUNCTIONS:
                return self.call(tok)
            if tok.text == self.variable:
                return Var(tok.text)
            raise ParseError(f"unknown identifier '{tok.text}'", tok.pos)
        raise ParseError("expected operand", tok.pos)

    def call(self, name: _Token) -> ExprAst:
        self.expect("lparen", "'(' after function name")
        args = [self.expr()]
        while self.peek().kind == "comma":
            self.advance()
            args.append(self.expr())
        self.expect("rparen", "')'")
        arity = FUNCTIONS[name.text]
        if len(args) != arity:
            raise ParseError(
                f"{name.text} expects {arity} argument{'s' if arity > 1 else ''},"
                f" got {len(args)}",
                name.pos,
            )
        return Call(name.text, tuple(args))


def parse_expr(src: str, variable: str = "x") -> ExprAst:
    """Parse ``src`` into an AST; the only legal free name is ``variable``."""
    parser = _Parser(_tokenize(src), variable)
    node = parser.expr()
    tail = parser.peek()
    if tail.kind != "end":
        raise ParseError(f"unexpected trailing input '{tail.text}'", tail.pos)
    return node


def _check_finite(value: float, node: ExprAst) -> float:
    if not math.isfinite(value):
        raise EvalError("non-finite result", format_expr(node))
    return value


def eval_expr(node: ExprAst, x: float) -> float:
    """Evaluate ``node`` at the variable value ``x`` in binary64.

    Division by zero, ``ln`` of a nonpositive value, ``sqrt`` of a negative
    value, and any non-finite intermediate raise :class:`EvalError`.
    """
    match node:
        case Num(value):
            return value
        case Var(_):
            return x
        case Neg(arg):
            return -eval_expr(arg, x)
        case BinOp("+", lhs, rhs):
            return _check_finite(eval_expr(lhs, x) + eval_expr(rhs, x), node)
        case BinOp("-", lhs, rhs):
            return _check_finite(eval_expr(lhs, x) - eval_expr(rhs, x), node)
        case BinOp("*", lhs, rhs):
            return _check_finite(eval_expr(lhs, x) * eval_expr(rhs, x), node)
        case BinOp("/", lhs, rhs):
            denom = eval_expr(rhs, x)
            if denom == 0.0:
                raise EvalError("division by zero", format_expr(node))
            return _check_finite(eval_expr(lhs, x) / denom, node)
        case BinOp("^", lhs, rhs):
            base, exponent = eval_expr(lhs, x), eval_expr(rhs, x)
            try:
                return _check_finite(math.pow(base, exponent), node)
            except (ValueError, OverflowError) as err:
                raise EvalError(f"invalid power: {err}", format_expr(node)) from None
        case Call("abs", (arg,)):
            return abs(eval_expr(arg, x))
        case Call("sqrt", (arg,)):
            v = eval_expr(arg, x)
            if v < 0.0:
                raise EvalError("sqrt of negative value", format_expr(node))
            return math.sqrt(v)
        case Call("ln", (arg,)):
            v = eval_expr(arg, x)
            if v <= 0.0:
                raise EvalError("ln of non-positive value", format_expr(node))
            return math.log(v)
        case Call("exp", (arg,)):
            try:
                return _check_finite(math.exp(eval_expr(arg, x)), node)
            except OverflowError:
                raise EvalError("exp overflow", format_expr(node)) from None
        case Call("min", (a, b)):
            return min(eval_expr(a, x), eval_expr(b, x))
        case Call("max", (a, b)):
            return max(eval_expr(a, x), eval_expr(b, x))
    raise EvalError("malformed AST node", repr(node))


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "neg": 3, "^": 4}


def _prec(node: ExprAst) -> int:
    match node:
        case BinOp(op, _, _):
            return _PREC[op]
        case Neg(_):
            return _PREC["neg"]
    return 5


def format_expr(node: ExprAst) -> str:
    """Print an AST back to canonical source; reparsing yields an equal AST."""
    match node:
        case Num(value):
            return repr(value)
        case Var(name):
            return name
        case Neg(arg):
            inner = format_expr(arg)
            if _prec(arg) < _PREC["neg"]:
                inner = f"({inner})"
            return f"-{inner}"
        case BinOp(op, lhs, rhs):
            p = _PREC[op]
            left, right = format_expr(lhs), format_expr(rhs)
            if op == "^":
                # right-associative: parenthesize the left side on ties
                if _prec(lhs) <= p:
                    left = f"({left})"
                if _prec(rhs) < p:
                    right = f"({right})"
            else:
                if _prec(lhs) < p:
                    left = f"({left})"
                if _prec(rhs) <= p:
                    right = f"({right})"
            return f"{left} {op} {right}"
        case Call(fn, args):
            return f"{fn}({', '.join(format_expr(a) for a in args)})"
    raise ValueError(f"malformed AST node: {node!r}")
