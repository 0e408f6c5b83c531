"""Expression language for Weyl and commutative elements.

Grammar (whitespace is ignored, ``*`` is never implicit)::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' nat)?
    atom     := rational | GEN | '(' expr ')' | '-' atom
    rational := int ('/' posint)?

``GEN`` is ``x``/``y`` in weyl mode and ``X``/``Y`` in poly mode.  Products
keep their written order.  A negated atom may not be raised to a power:
``-x^2`` is rejected and must be written ``-(x^2)`` or ``(-x)^2``.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .poly import PolyElement
from .weyl import WeylElement

MODES = {
    "weyl": (WeylElement, ("x", "y"), ("X", "Y")),
    "poly": (PolyElement, ("X", "Y"), ("x", "y")),
}


class ExprSyntaxError(ValueError):
    """Malformed expression; ``position`` is a 0-based character offset."""

    def __init__(self, message, position, text=""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at column {position + 1}")


class InvalidExponent(ExprSyntaxError):
    pass


class WrongGenerator(ExprSyntaxError):
    pass


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str  # one of "+", "-", "*"
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Group:
    inner: object


_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_]\w*)|(.))")


def tokenize(text):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == m.start() or not text[m.start():].strip():
            break
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start, m.lastindex))
        pos = m.end()
    tokens.append(("", len(text), 0))
    return tokens


class _Parser:
    NUM, NAME, PUNCT = 1, 2, 3

    def __init__(self, text, mode):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        _, self.gens, self.other_gens = MODES[mode]
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, pos=None, cls=ExprSyntaxError):
        if pos is None:
            pos = self.peek()[1]
        return cls(message, pos, self.text)

    def expect(self, value):
        tok = self.peek()
        if tok[0] != value:
            found = repr(tok[0]) if tok[0] else "end of input"
            raise self.error(f"expected {value!r}, found {found}")
        return self.advance()

    def parse(self):
        if self.peek()[2] == 0:
            raise self.error("empty expression")
        node = self.expr()
        tok = self.peek()
        if tok[2] != 0:
            raise self.error(f"unexpected {tok[0]!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        if self.peek()[0] != "^":
            return node
        caret = self.advance()
        if isinstance(node, Neg):
            raise self.error("ambiguous power of a negation; write (-a)^n or -(a^n)", caret[1])
        tok = self.peek()
        if tok[0] == "-":
            raise self.error("negative exponent", tok[1], InvalidExponent)
        if tok[2] != self.NUM:
            raise self.error("exponent must be a nonnegative integer", tok[1])
        if "." in tok[0]:
            raise self.error("fractional exponent", tok[1], InvalidExponent)
        self.advance()
        if self.peek()[0] == "/":
            raise self.error("fractional exponent", tok[1], InvalidExponent)
        return Pow(node, int(tok[0]))

    def atom(self):
        tok = self.peek()
        value, pos, kind = tok
        if kind == self.NUM:
            if "." in value:
                raise self.error("decimal literals are not exact; use p/q", pos)
            self.advance()
            num = int(value)
            if self.peek()[0] == "/":
                self.advance()
                den_tok = self.peek()
                if den_tok[2] != self.NUM or "." in den_tok[0] or int(den_tok[0]) == 0:
                    raise self.error("denominator must be a positive integer", den_tok[1])
                self.advance()
                return Num(Fraction(num, int(den_tok[0])))
            return Num(Fraction(num))
        if kind == self.NAME:
            if value in self.gens:
                self.advance()
                return Gen(value)
            if value in self.other_gens:
                raise self.error(
                    f"generator {value!r} belongs to the other mode; use {'/'.join(self.gens)}",
                    pos,
                    WrongGenerator,
                )
            raise self.error(f"unknown symbol {value!r}", pos)
        if value == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return Group(inner)
        if value == "-":
            self.advance()
            return Neg(self.atom())
        if kind == 0:
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {value!r}")


def parse(text, mode="weyl"):
    """Parse ``text`` into an AST; raises :class:`ExprSyntaxError` subclasses."""
    return _Parser(text, mode).parse()


def evaluate(node, mode="weyl"):
    cls, gens, _ = MODES[mode]
    x, y = cls.generators()
    env = {gens[0]: x, gens[1]: y}

    def ev(n):
        if isinstance(n, Num):
            return cls(n.value)
        if isinstance(n, Gen):
            return env[n.name]
        if isinstance(n, Group):
            return ev(n.inner)
        if isinstance(n, Neg):
            return -ev(n.operand)
        if isinstance(n, Pow):
            return ev(n.base) ** n.exponent
        if isinstance(n, BinOp):
            left, right = ev(n.left), ev(n.right)
            if n.op == "+":
                return left + right
            if n.op == "-":
                return left - right
            return left * right
        raise TypeError(f"not an expression node: {n!r}")

    return ev(node)


def parse_element(text, mode="weyl"):
    return evaluate(parse(text, mode), mode)


def render(e):
    """Canonical text form; ``parse_element(render(e))`` gives back ``e``."""
    return str(e)
