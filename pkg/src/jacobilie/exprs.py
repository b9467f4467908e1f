"""Tiny exact expression language for parameter templates and constraints.

Grammar: integers, parameter names, unary minus, ``+ - * /``, parentheses,
and a single optional comparison (``== != < <= > >=``) for predicates.
Division is exact rational division, so ``"1/2"`` is the rational one half.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>==|!=|<=|>=|[<>+\-*/()]))"
)


class ExprError(ValueError):
    """Malformed expression or evaluation failure (unknown name, zero division)."""


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ExprError(f"bad character in expression: {text[pos:]!r}")
            break
        if m.group("num"):
            tokens.append(("num", m.group("num")))
        elif m.group("name"):
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]], text: str) -> None:
        self.tokens = tokens
        self.pos = 0
        self.text = text

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise ExprError(f"unexpected end of expression: {self.text!r}")
        self.pos += 1
        return tok

    def parse_comparison(self):
        left = self.parse_sum()
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] in ("==", "!=", "<", "<=", ">", ">="):
            self.take()
            right = self.parse_sum()
            return ("cmp", tok[1], left, right)
        return left

    def parse_sum(self):
        node = self.parse_term()
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] in ("+", "-"):
                self.take()
                rhs = self.parse_term()
                node = ("add" if tok[1] == "+" else "sub", node, rhs)
            else:
                return node

    def parse_term(self):
        node = self.parse_factor()
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] in ("*", "/"):
                self.take()
                rhs = self.parse_factor()
                node = ("mul" if tok[1] == "*" else "div", node, rhs)
            else:
                return node

    def parse_factor(self):
        tok = self.take()
        if tok == ("op", "-"):
            return ("neg", self.parse_factor())
        if tok == ("op", "+"):
            return self.parse_factor()
        if tok[0] == "num":
            return ("num", Fraction(int(tok[1])))
        if tok[0] == "name":
            return ("var", tok[1])
        if tok == ("op", "("):
            node = self.parse_comparison()
            closing = self.take()
            if closing != ("op", ")"):
                raise ExprError(f"expected ')' in {self.text!r}")
            return node
        raise ExprError(f"unexpected token {tok[1]!r} in {self.text!r}")


def parse_expr(text: str):
    """Parse to a small AST of nested tuples; raises ExprError on bad input."""
    parser = _Parser(_tokenize(text), text)
    node = parser.parse_comparison()
    if parser.peek() is not None:
        raise ExprError(f"trailing tokens in {text!r}")
    return node


def _eval(node, env: Mapping[str, Fraction]):
    kind = node[0]
    if kind == "num":
        return node[1]
    if kind == "var":
        try:
            return Fraction(env[node[1]])
        except KeyError:
            raise ExprError(f"unknown parameter {node[1]!r}") from None
    if kind == "neg":
        return -_eval(node[1], env)
    if kind == "add":
        return _eval(node[1], env) + _eval(node[2], env)
    if kind == "sub":
        return _eval(node[1], env) - _eval(node[2], env)
    if kind == "mul":
        return _eval(node[1], env) * _eval(node[2], env)
    if kind == "div":
        denom = _eval(node[2], env)
        if denom == 0:
            raise ExprError("division by zero while evaluating expression")
        return _eval(node[1], env) / denom
    if kind == "cmp":
        a = _eval(node[2], env)
        b = _eval(node[3], env)
        op = node[1]
        if op == "==":
            return a == b
        if op == "!=":
            return a != b
        if op == "<":
            return a < b
        if op == "<=":
            return a <= b
        if op == ">":
            return a > b
        return a >= b
    raise ExprError(f"bad AST node {node!r}")


def eval_expr(expr, env: Mapping[str, Fraction] | None = None) -> Fraction:
    """Evaluate an arithmetic expression (text or parsed AST) to a Fraction."""
    node = parse_expr(expr) if isinstance(expr, str) else expr
    value = _eval(node, env or {})
    if isinstance(value, bool):
        raise ExprError("expected an arithmetic expression, got a comparison")
    return value


def eval_predicate(expr, env: Mapping[str, Fraction] | None = None) -> bool:
    """Evaluate a comparison predicate (text or parsed AST) to a bool."""
    node = parse_expr(expr) if isinstance(expr, str) else expr
    value = _eval(node, env or {})
    if not isinstance(value, bool):
        raise ExprError("expected a comparison, got an arithmetic expression")
    return value


def expr_names(expr) -> set[str]:
    """Parameter names referenced by an expression."""
    node = parse_expr(expr) if isinstance(expr, str) else expr
    out: set[str] = set()

    def walk(n):
        if n[0] == "var":
            out.add(n[1])
        elif n[0] in ("neg",):
            walk(n[1])
        elif n[0] in ("add", "sub", "mul", "div"):
            walk(n[1])
            walk(n[2])
        elif n[0] == "cmp":
            walk(n[2])
            walk(n[3])

    walk(node)
    return out
