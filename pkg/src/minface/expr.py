"""Tiny expression language for data functions of one real variable.

GRAMMAR (EBNF):

    expr    := term (("+" | "-") term)*
    term    := factor (("*" | "/") factor)*
    factor  := "-" factor | power
    power   := atom ("^" integer)?
    atom    := number | ident | ident "(" expr ")" | "(" expr ")"

Numbers are decimal literals, scientific notation allowed ("1e-3", "2.5E+1").
An integer exponent may carry a leading '-'. ``pi`` and ``e`` are named
constants and fold to numbers at parse time. Any other identifier not followed
by "(" is the variable; an expression may use at most one distinct variable
name (``MultipleVariables`` otherwise). The callable identifiers are exactly
sin, cos, tan, exp, log, sqrt, atan, sinh, cosh.

Parse errors carry the byte offset of the offending token and a hint of what
was expected. Evaluation errors (log of a negative jet, division by zero)
carry the source span of the offending subexpression.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Optional, Union

from . import jets
from .errors import (DivisionByZero, DomainError, ExpressionSyntaxError,
                     MultipleVariables, NonIntegerExponent)
from .jets import Jet3

FUNCTIONS = ("sin", "cos", "tan", "exp", "log", "sqrt", "atan", "sinh", "cosh")
CONSTANTS = {"pi": math.pi, "e": math.e}

_NUMBER_RE = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_INT_RE = re.compile(r"-?\d+\Z")


# --- AST ------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: float
    span: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Var:
    name: str
    span: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Neg:
    child: "Node"
    span: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Node"
    right: "Node"
    span: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int
    span: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Call:
    fn: str
    arg: "Node"
    span: tuple = field(default=(0, 0), compare=False)


Node = Union[Num, Var, Neg, BinOp, Pow, Call]


@dataclass(frozen=True)
class Expression:
    """A parsed expression plus its single variable name (None if constant)."""

    root: Node
    variable: Optional[str]
    text: str = field(default="", compare=False)

    def __str__(self):
        return to_string(self)


# --- tokenizer --------------------------------------------------------------


@dataclass(frozen=True)
class _Tok:
    kind: str  # NUM IDENT OP END
    text: str
    pos: int


def _tokenize(text: str):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch.isdigit() or ch == ".":
            m = _NUMBER_RE.match(text, i)
            if not m:
                raise ExpressionSyntaxError(i, "a number", ch)
            toks.append(_Tok("NUM", m.group(), i))
            i = m.end()
            continue
        if ch.isalpha() or ch == "_":
            m = _IDENT_RE.match(text, i)
            toks.append(_Tok("IDENT", m.group(), i))
            i = m.end()
            continue
        if ch in "+-*/^()":
            toks.append(_Tok("OP", ch, i))
            i += 1
            continue
        raise ExpressionSyntaxError(i, "a number, name, or operator", ch)
    toks.append(_Tok("END", "", n))
    return toks


# --- parser -----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op: str):
        t = self.peek()
        if t.kind != "OP" or t.text != op:
            raise ExpressionSyntaxError(t.pos, f"'{op}'", t.text or "end of input")
        return self.take()

    def parse(self) -> Node:
        node = self.expr()
        t = self.peek()
        if t.kind != "END":
            raise ExpressionSyntaxError(t.pos, "end of input", t.text)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek().kind == "OP" and self.peek().text in "+-":
            op = self.take().text
            rhs = self.term()
            node = BinOp(op, node, rhs, (node.span[0], rhs.span[1]))
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek().kind == "OP" and self.peek().text in "*/":
            op = self.take().text
            rhs = self.factor()
            node = BinOp(op, node, rhs, (node.span[0], rhs.span[1]))
        return node

    def factor(self) -> Node:
        t = self.peek()
        if t.kind == "OP" and t.text == "-":
            self.take()
            child = self.factor()
            return Neg(child, (t.pos, child.span[1]))
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        t = self.peek()
        if t.kind == "OP" and t.text == "^":
            self.take()
            exp_tok = self.peek()
            # Exponent must be an integer literal, optional leading '-'.
            sign = ""
            if exp_tok.kind == "OP" and exp_tok.text == "-":
                self.take()
                sign = "-"
                exp_tok = self.peek()
            if exp_tok.kind != "NUM":
                raise NonIntegerExponent(exp_tok.pos, exp_tok.text or "end of input")
            if not _INT_RE.match(exp_tok.text):
                raise NonIntegerExponent(exp_tok.pos, exp_tok.text)
            self.take()
            n = int(sign + exp_tok.text)
            return Pow(base, n, (base.span[0], exp_tok.pos + len(exp_tok.text)))
        return base

    def atom(self) -> Node:
        t = self.peek()
        if t.kind == "NUM":
            self.take()
            return Num(float(t.text), (t.pos, t.pos + len(t.text)))
        if t.kind == "IDENT":
            self.take()
            nxt = self.peek()
            if nxt.kind == "OP" and nxt.text == "(":
                if t.text not in FUNCTIONS:
                    raise ExpressionSyntaxError(
                        t.pos, "one of " + ", ".join(FUNCTIONS), t.text)
                self.take()
                arg = self.expr()
                close = self.expect_op(")")
                return Call(t.text, arg, (t.pos, close.pos + 1))
            if t.text in CONSTANTS:
                return Num(CONSTANTS[t.text], (t.pos, t.pos + len(t.text)))
            if t.text in FUNCTIONS:
                raise ExpressionSyntaxError(t.pos, f"'(' after function {t.text}",
                                            t.text)
            return Var(t.text, (t.pos, t.pos + len(t.text)))
        if t.kind == "OP" and t.text == "(":
            self.take()
            inner = self.expr()
            close = self.expect_op(")")
            # Keep the child node; widen its span to include the parens.
            return _respan(inner, (t.pos, close.pos + 1))
        raise ExpressionSyntaxError(t.pos, "a number, name, or '('",
                                    t.text or "end of input")


def _respan(node: Node, span) -> Node:
    kwargs = {f: getattr(node, f) for f in node.__dataclass_fields__}
    kwargs["span"] = span
    return type(node)(**kwargs)


def _collect_vars(node: Node, names: set):
    if isinstance(node, Var):
        names.add(node.name)
    elif isinstance(node, Neg):
        _collect_vars(node.child, names)
    elif isinstance(node, BinOp):
        _collect_vars(node.left, names)
        _collect_vars(node.right, names)
    elif isinstance(node, Pow):
        _collect_vars(node.base, names)
    elif isinstance(node, Call):
        _collect_vars(node.arg, names)


def parse(text: str) -> Expression:
    """Parse source text into an Expression; see the module grammar."""
    root = _Parser(text).parse()
    names: set = set()
    _collect_vars(root, names)
    if len(names) > 1:
        raise MultipleVariables(names)
    return Expression(root, names.pop() if names else None, text)


# --- evaluation -------------------------------------------------------------


def eval_jet(e: Expression, x: Jet3) -> Jet3:
    """Evaluate on a jet; the single variable is bound to x."""
    return _eval_jet(e.root, x)


def _eval_jet(node: Node, x: Jet3) -> Jet3:
    if isinstance(node, Num):
        return jets.constant(node.value)
    if isinstance(node, Var):
        return x
    if isinstance(node, Neg):
        return jets.neg(_eval_jet(node.child, x))
    if isinstance(node, BinOp):
        a = _eval_jet(node.left, x)
        b = _eval_jet(node.right, x)
        if node.op == "+":
            return jets.add(a, b)
        if node.op == "-":
            return jets.sub(a, b)
        if node.op == "*":
            return jets.mul(a, b)
        try:
            return jets.div(a, b)
        except DivisionByZero:
            raise DivisionByZero(span=node.span) from None
    if isinstance(node, Pow):
        try:
            return jets.int_pow(_eval_jet(node.base, x), node.exponent)
        except DivisionByZero:
            raise DivisionByZero(span=node.span) from None
    if isinstance(node, Call):
        arg = _eval_jet(node.arg, x)
        try:
            return jets.ELEMENTARY[node.fn](arg)
        except DomainError as err:
            raise DomainError(err.fn, err.value, span=node.span) from None
    raise TypeError(f"unknown node {node!r}")


_MATH_FN = {
    "sin": math.sin, "cos": math.cos, "tan": math.tan, "exp": math.exp,
    "log": math.log, "sqrt": math.sqrt, "atan": math.atan,
    "sinh": math.sinh, "cosh": math.cosh,
}


def eval_value(e: Expression, x: float) -> float:
    """Value-only evaluation; cheaper than eval_jet inside quadrature loops."""
    return _eval_value(e.root, x)


def _eval_value(node: Node, x: float) -> float:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        return x
    if isinstance(node, Neg):
        return -_eval_value(node.child, x)
    if isinstance(node, BinOp):
        a = _eval_value(node.left, x)
        b = _eval_value(node.right, x)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if b == 0.0:
            raise DivisionByZero(span=node.span)
        return a / b
    if isinstance(node, Pow):
        base = _eval_value(node.base, x)
        if base == 0.0 and node.exponent < 0:
            raise DivisionByZero(span=node.span)
        return base ** node.exponent
    if isinstance(node, Call):
        arg = _eval_value(node.arg, x)
        if node.fn in ("log", "sqrt") and arg <= 0.0:
            raise DomainError(node.fn, arg, span=node.span)
        try:
            return _MATH_FN[node.fn](arg)
        except (ValueError, OverflowError):
            raise DomainError(node.fn, arg, span=node.span) from None
    raise TypeError(f"unknown node {node!r}")


# --- canonical printing ------------------------------------------------------

# Precedence levels for minimal parenthesization.
_PREC_ADD, _PREC_MUL, _PREC_NEG, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4, 5


def _prec(node: Node) -> int:
    if isinstance(node, BinOp):
        return _PREC_ADD if node.op in "+-" else _PREC_MUL
    if isinstance(node, Neg):
        return _PREC_NEG
    if isinstance(node, Pow):
        return _PREC_POW
    return _PREC_ATOM


def _fmt(node: Node) -> str:
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Call):
        return f"{node.fn}({_fmt(node.arg)})"
    if isinstance(node, Neg):
        inner = _fmt(node.child)
        if _prec(node.child) < _PREC_NEG:
            inner = f"({inner})"
        return "-" + inner
    if isinstance(node, Pow):
        base = _fmt(node.base)
        if _prec(node.base) < _PREC_ATOM:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, BinOp):
        p = _prec(node)
        left = _fmt(node.left)
        if _prec(node.left) < p:
            left = f"({left})"
        right = _fmt(node.right)
        # Left-associative: the right child needs parens at equal precedence
        # for the non-commutative spellings.
        if _prec(node.right) < p or (_prec(node.right) == p and node.op in "-/"):
            right = f"({right})"
        return f"{left}{node.op}{right}"
    raise TypeError(f"unknown node {node!r}")


def to_string(e: Expression) -> str:
    """Canonical text form; parse(to_string(e)) reproduces the same AST."""
    return _fmt(e.root)


def negated(e: Expression) -> Expression:
    """The expression -(e), used to build conjugate surface data."""
    root = Neg(e.root, e.root.span)
    return Expression(root, e.variable, _fmt(root))
