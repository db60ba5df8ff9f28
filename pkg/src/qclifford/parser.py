"""Expression front end: a precedence-climbing parser for polynomial and
multivector expressions, and the lowering of its AST into the algebra.

Grammar, loosest to tightest binding: addition/subtraction, then
multiplication/division, then unary minus, then power (nonnegative
integer exponents), then atoms.  An explicit '*' is required between
factors, so x12 is variable twelve, never x1*x2.  Atoms are `q`, `xK`,
`eK`, integer literals and parenthesized expressions (`t` replaces the
variables in one-dimensional mode).  Division is valid whenever the
divisor is a scalar constant; this covers rational literals like 1/2 and
makes every canonical rendering reparse.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cpoly import CliffordPoly
from .errors import DivisionByZero, InvalidArgument, InvalidVariable, ParseError
from .jackson import UniPoly
from .qfield import QPoly, QScalar


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class SymQ:
    pass


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Gen:
    index: int


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


def tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if c.isalpha():
            j = i
            while j < n and (text[j].isalnum()):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if c in "+-*/^()":
            tokens.append((c, c, i))
            i += 1
            continue
        raise ParseError("unexpected character %r" % c, i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text, m, one_dim=False):
        self.tokens = tokenize(text)
        self.pos = 0
        self.m = m
        self.one_dim = one_dim

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError("expected %r, found %r" % (kind, tok[1] or "end"), tok[2])
        return tok

    def parse(self):
        expr = self.expr(0)
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError("unexpected trailing %r" % tok[1], tok[2])
        return expr

    def expr(self, min_prec):
        left = self.unary()
        while True:
            kind, _, _ = self.peek()
            prec = {"+": 1, "-": 1, "*": 2, "/": 2}.get(kind)
            if prec is None or prec < min_prec:
                return left
            self.advance()
            right = self.expr(prec + 1)
            left = BinOp(kind, left, right)

    def unary(self):
        kind, _, _ = self.peek()
        if kind == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.expect("int")
            return Pow(base, int(tok[1]))
        return base

    def atom(self):
        kind, text, pos = self.advance()
        if kind == "int":
            return Num(Fraction(int(text)))
        if kind == "(":
            inner = self.expr(0)
            self.expect(")")
            return inner
        if kind == "name":
            return self.name_atom(text, pos)
        raise ParseError("unexpected %r" % (text or "end of input"), pos)

    def name_atom(self, text, pos):
        if text == "q":
            return SymQ()
        if self.one_dim:
            if text == "t":
                return Var(1)
            raise ParseError("unknown symbol %r (expected t or q)" % text, pos)
        head, tail = text[0], text[1:]
        if head in ("x", "e") and tail.isdigit():
            index = int(tail)
            if index > self.m:
                raise InvalidVariable(
                    "%s exceeds dimension m = %d" % (text, self.m)
                )
            return Var(index) if head == "x" else Gen(index)
        raise ParseError("unknown symbol %r" % text, pos)


def parse(text, m):
    """Parse an expression over x1..xm (plus x0/e0) into an AST."""
    return _Parser(text, m).parse()


def _scalar_of(P):
    """Extract a QScalar from a constant scalar-blade polynomial."""
    if P.is_zero():
        return QScalar(0)
    if list(P.terms) == [(0,) * (P.m + 1)]:
        mv = P.constant_coefficient()
        if mv.is_scalar():
            return mv.scalar_part()
    raise InvalidArgument("divisor must be a scalar constant, got %s" % P)


def lower(expr, m):
    """Evaluate an AST in the polynomial algebra."""
    if isinstance(expr, Num):
        return CliffordPoly.scalar(QScalar(QPoly((expr.value,))), m)
    if isinstance(expr, SymQ):
        return CliffordPoly.scalar(QScalar(QPoly((0, 1))), m)
    if isinstance(expr, Var):
        return CliffordPoly.variable(expr.index, m)
    if isinstance(expr, Gen):
        return CliffordPoly.generator(expr.index, m)
    if isinstance(expr, Neg):
        return -lower(expr.operand, m)
    if isinstance(expr, Pow):
        return lower(expr.base, m) ** expr.exponent
    if isinstance(expr, BinOp):
        left = lower(expr.left, m)
        right = lower(expr.right, m)
        if expr.op == "+":
            return left + right
        if expr.op == "-":
            return left - right
        if expr.op == "*":
            return left * right
        divisor = _scalar_of(right)
        if divisor.is_zero():
            raise DivisionByZero("division by zero expression")
        return left * (QScalar(1) / divisor)
    raise TypeError("not an expression node: %r" % (expr,))


def parse_poly(text, m):
    """Parse and lower in one step."""
    return lower(parse(text, m), m)


def parse_unipoly(text):
    """Parse a one-dimensional expression in t into a UniPoly."""
    P = lower(_Parser(text, 1, one_dim=True).parse(), 1)
    out = {}
    for alpha, mv in P.terms.items():
        if not mv.is_scalar():
            raise InvalidArgument("generators are not allowed in 1D expressions")
        out[alpha[1]] = mv.scalar_part()
    return UniPoly(out)
