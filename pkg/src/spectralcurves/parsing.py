"""Text parser for polynomials, rational functions and differential operators.

Grammar (whitespace-insensitive)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INTEGER)?
    atom   := INTEGER | NAME | "(" expr ")"

Names are ``x``, ``lam``, ``mu1``, ``mu2``, ``tau`` and, in operator mode, ``D``
for the derivation.  Numeric literals are integers; write ``3/2`` rather than
``1.5``.
"""

import re
from dataclasses import dataclass

from .arith import VARS, Frac, MPoly


class ParseError(ValueError):
    """Malformed input.  ``kind`` is ``syntax``, ``literal`` or ``symbol``."""

    def __init__(self, message, line, column, token, kind="syntax"):
        self.line = line
        self.column = column
        self.token = token
        self.kind = kind
        self.message = message
        super().__init__(f"line {line}, column {column}: {message} (at {token!r})")


_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+)|(?P<name>[A-Za-z_]\w*)"
    r"|(?P<op>[-+*/^()])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(src, line=1):
    tokens = []
    pos = 0
    col0 = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError("unexpected character", line, pos - col0 + 1, src[pos])
        kind = m.lastgroup
        text = m.group()
        if kind == "ws":
            nl = text.count("\n")
            if nl:
                line += nl
                col0 = pos + text.rindex("\n") + 1
        else:
            tokens.append(Token(kind, text, line, pos - col0 + 1))
        pos = m.end()
    tokens.append(Token("end", "", line, pos - col0 + 1))
    return tokens


# AST nodes are plain tuples: ("num", int), ("sym", name), ("neg", a),
# ("add"|"sub"|"mul"|"div", a, b), ("pow", a, k).  Each carries its token last.


class _Parser:
    def __init__(self, tokens, names):
        self.toks = tokens
        self.i = 0
        self.names = names

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, tok, msg, kind="syntax"):
        text = tok.text if tok.kind != "end" else "<end of input>"
        raise ParseError(msg, tok.line, tok.column, text, kind)

    def parse(self):
        node = self.expr()
        t = self.peek()
        if t.kind != "end":
            self.fail(t, "unexpected token")
        return node

    def expr(self):
        node = self.term()
        while self.peek().text in ("+", "-") and self.peek().kind == "op":
            t = self.next()
            node = ("add" if t.text == "+" else "sub", node, self.term(), t)
        return node

    def term(self):
        node = self.unary()
        while self.peek().text in ("*", "/") and self.peek().kind == "op":
            t = self.next()
            node = ("mul" if t.text == "*" else "div", node, self.unary(), t)
        return node

    def unary(self):
        t = self.peek()
        if t.kind == "op" and t.text in ("+", "-"):
            self.next()
            inner = self.unary()
            return inner if t.text == "+" else ("neg", inner, t)
        return self.power()

    def power(self):
        base = self.atom()
        t = self.peek()
        if t.kind == "op" and t.text == "^":
            self.next()
            e = self.peek()
            if e.kind != "num":
                # report at the caret whose exponent is malformed
                raise ParseError(
                    "expected a non-negative integer exponent after '^'",
                    t.line, t.column, e.text or "<end of input>",
                )
            self.next()
            if not e.text.isdigit():
                self.fail(e, "exponent must be a non-negative integer", "literal")
            return ("pow", base, int(e.text), t)
        return base

    def atom(self):
        t = self.next()
        if t.kind == "num":
            if not t.text.isdigit():
                self.fail(t, "non-rational numeric literal; write a quotient of integers",
                          "literal")
            return ("num", int(t.text), t)
        if t.kind == "name":
            if t.text not in self.names:
                self.fail(t, f"unknown symbol; expected one of {', '.join(self.names)}",
                          "symbol")
            return ("sym", t.text, t)
        if t.kind == "op" and t.text == "(":
            node = self.expr()
            close = self.next()
            if close.text != ")":
                self.fail(close, "expected ')'")
            return node
        self.fail(t, "expected a number, a name or '('")


def parse_ast(src, names=VARS, line=1):
    return _Parser(tokenize(src, line), tuple(names)).parse()


def _eval(node, leaf, div, ops_mul):
    kind = node[0]
    if kind == "num":
        return leaf(("num", node[1]), node[-1])
    if kind == "sym":
        return leaf(("sym", node[1]), node[-1])
    if kind == "neg":
        return -_eval(node[1], leaf, div, ops_mul)
    if kind == "pow":
        base = _eval(node[1], leaf, div, ops_mul)
        return base ** node[2]
    a = _eval(node[1], leaf, div, ops_mul)
    b = _eval(node[2], leaf, div, ops_mul)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return ops_mul(a, b)
    return div(a, b, node[-1])


def _leaf_poly(item, tok):
    kind, val = item
    return MPoly.const(val) if kind == "num" else MPoly.var(val)


def parse_poly(src):
    """Parse a polynomial; division only by nonzero integer constants."""
    ast = parse_ast(src)

    def div(a, b, tok):
        if not b.is_constant() or not b:
            raise ParseError("polynomial division requires a nonzero constant divisor",
                             tok.line, tok.column, tok.text)
        return a.scale(1 / b.constant_value())

    return _eval(ast, _leaf_poly, div, lambda a, b: a * b)


def parse_frac(src):
    """Parse a rational function in ``x, lam, mu1, mu2, tau``."""
    ast = parse_ast(src)

    def leaf(item, tok):
        return Frac.lift(_leaf_poly(item, tok))

    def div(a, b, tok):
        if not b:
            raise ParseError("division by zero", tok.line, tok.column, tok.text)
        return a / b

    return _eval(ast, leaf, div, lambda a, b: a * b)


def parse_operator_text(src, line=1):
    """Parse an operator expression; ``D`` is the derivation d/dx.

    Products are operator products, so ``D*x`` means ``x*D + 1``.
    """
    from .diffop import D, DiffOp

    ast = parse_ast(src, VARS + ("D",), line)

    def leaf(item, tok):
        kind, val = item
        if kind == "sym" and val == "D":
            return D
        return DiffOp.const(Frac.lift(_leaf_poly(item, tok)))

    def div(a, b, tok):
        if not b:
            raise ParseError("division by zero", tok.line, tok.column, tok.text)
        if b.order != 0:
            raise ParseError("only division by a function (order-zero factor) is allowed",
                             tok.line, tok.column, tok.text)
        if a and a.order > 0:
            raise ParseError("cannot divide an operator of positive order; "
                             "write the coefficient as (f/g)*D^k",
                             tok.line, tok.column, tok.text)
        return DiffOp.const(a.coeff(0) / b.coeff(0))

    return _eval(ast, leaf, div, lambda a, b: a * b)
