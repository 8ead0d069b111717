"""Expression parsing and canonical printing.

Grammar (whitespace-insensitive, no implicit multiplication):

    expr     := term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := atom ['^' nat]
    atom     := rational | 'i' | ident | '(' expr ')' | '-' factor
    rational := int ['/' nat]
    ident    := letter (letter|digit)*

``i`` is the imaginary unit literal.  A parenthesized exponent is tolerated
so that ``x^(-1)`` reports NegativeExponent rather than a bare syntax error.

The printer emits the canonical form (graded-lex descending terms,
coefficients as ``a``, ``a/b`` or ``(a+b*i)``); parsing its output always
reproduces the polynomial exactly.
"""

from dataclasses import dataclass
from fractions import Fraction

from kholo.errors import (
    DegreeOverflow,
    DivisionByZero,
    ExprSyntaxError,
    NegativeExponent,
    UnknownVariable,
)
from kholo.polynomials import MAX_TOTAL_DEGREE, SparsePoly, VarSpace
from kholo.rationals import GQ_I, GaussianRational

_MAX_DEPTH = 200


# -- AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class Const:
    value: GaussianRational


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


# -- tokenizer ----------------------------------------------------------------

_SYMBOLS = set("+-*^/()")


@dataclass
class _Token:
    kind: str  # 'int' | 'ident' | symbol | 'end'
    text: str
    line: int
    column: int


def _tokenize(text):
    tokens = []
    line, column = 1, 1
    pos = 0
    length = len(text)
    while pos < length:
        ch = text[pos]
        if ch == "\n":
            line += 1
            column = 1
            pos += 1
            continue
        if ch.isspace():
            column += 1
            pos += 1
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, line, column))
            column += 1
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < length and text[pos].isdigit():
                pos += 1
            tokens.append(_Token("int", text[start:pos], line, column))
            column += pos - start
            continue
        if ch.isalpha():
            start = pos
            while pos < length and text[pos].isalnum():
                pos += 1
            tokens.append(_Token("ident", text[start:pos], line, column))
            column += pos - start
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", line, column)
    tokens.append(_Token("end", "", line, column))
    return tokens


# -- parser -------------------------------------------------------------------

class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.depth = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.peek()
        if tok.kind != kind:
            raise ExprSyntaxError(
                f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                tok.line, tok.column)
        return self.advance()

    def _enter(self):
        self.depth += 1
        if self.depth > _MAX_DEPTH:
            tok = self.peek()
            raise ExprSyntaxError("expression nested too deeply",
                                  tok.line, tok.column)

    def parse(self):
        ast = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExprSyntaxError(f"unexpected trailing {tok.text!r}",
                                  tok.line, tok.column)
        return ast

    def expr(self):
        self._enter()
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        self.depth -= 1
        return node

    def term(self):
        node = self.factor()
        while self.peek().kind == "*":
            self.advance()
            node = Mul(node, self.factor())
        return node

    def factor(self):
        self._enter()
        node = self.atom()
        if self.peek().kind == "^":
            self.advance()
            node = Pow(node, self.exponent())
        self.depth -= 1
        return node

    def exponent(self):
        tok = self.peek()
        wrapped = tok.kind == "("
        if wrapped:
            self.advance()
            tok = self.peek()
        if tok.kind == "-":
            raise NegativeExponent("exponent must be a non-negative integer",
                                   tok.line, tok.column)
        value_tok = self.expect("int")
        value = int(value_tok.text)
        if wrapped:
            self.expect(")")
        return value

    def atom(self):
        self._enter()
        tok = self.peek()
        if tok.kind == "-":
            self.advance()
            node = Neg(self.factor())
        elif tok.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
        elif tok.kind == "int":
            node = Const(self.rational())
        elif tok.kind == "ident":
            self.advance()
            node = Const(GQ_I) if tok.text == "i" else Var(tok.text)
        else:
            raise ExprSyntaxError(
                f"unexpected {tok.text or 'end of input'!r}",
                tok.line, tok.column)
        self.depth -= 1
        return node

    def rational(self):
        num_tok = self.expect("int")
        numerator = int(num_tok.text)
        if self.peek().kind == "/":
            self.advance()
            den_tok = self.expect("int")
            denominator = int(den_tok.text)
            if denominator == 0:
                raise DivisionByZero(
                    f"zero denominator at line {den_tok.line}, "
                    f"column {den_tok.column}")
            return GaussianRational(Fraction(numerator, denominator))
        return GaussianRational(numerator)


def parse_expression(text):
    """Parse text to an AST without lowering it."""
    return _Parser(text).parse()


# -- lowering -----------------------------------------------------------------

def _resolve_name(name, space):
    if name in space:
        return name
    # one-dimensional convenience: x means x1 when n == 1
    if space.n == 1 and name in ("x", "y", "z", "w") and f"{name}1" in space:
        return f"{name}1"
    raise UnknownVariable(f"{name!r} is not a variable of this space")


def lower(ast, space):
    """Lower an AST to a canonical SparsePoly in the given space."""
    if isinstance(ast, Const):
        return SparsePoly.constant(space, ast.value)
    if isinstance(ast, Var):
        return SparsePoly.variable(space, _resolve_name(ast.name, space))
    if isinstance(ast, Neg):
        return -lower(ast.operand, space)
    if isinstance(ast, Add):
        return lower(ast.left, space) + lower(ast.right, space)
    if isinstance(ast, Sub):
        return lower(ast.left, space) - lower(ast.right, space)
    if isinstance(ast, Mul):
        return lower(ast.left, space) * lower(ast.right, space)
    if isinstance(ast, Pow):
        if ast.exponent > MAX_TOTAL_DEGREE:
            raise DegreeOverflow(f"exponent {ast.exponent} exceeds the bound")
        return lower(ast.base, space) ** ast.exponent
    raise TypeError(f"not an AST node: {ast!r}")


def parse_poly(text, space):
    """Parse an expression into a canonical polynomial of the space."""
    return lower(parse_expression(text), space)


def parse_gaussian(text):
    """Parse a constant expression to a GaussianRational."""
    empty = VarSpace((), 0)
    return parse_poly(text, empty).constant_term()


def parse_point(text, n):
    """Parse a comma-separated Gaussian-rational tuple of arity n."""
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    if len(parts) != n:
        raise ExprSyntaxError(f"expected {n} coordinates, found {len(parts)}")
    return tuple(parse_gaussian(part) for part in parts)


# -- printer ------------------------------------------------------------------

def format_rational(value):
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _imag_piece(b):
    if b == 1:
        return "i"
    if b == -1:
        return "-i"
    return f"{format_rational(b)}*i"


def format_gaussian(c):
    """Canonical scalar form: 'a', 'a/b', or parenthesized 'a+b*i'."""
    if c.is_real():
        return format_rational(c.re)
    re, im = c.re, c.im
    if re == 0:
        return f"({_imag_piece(im)})"
    sign = "+" if im > 0 else "-"
    mag = -im if im < 0 else im
    piece = "i" if mag == 1 else f"{format_rational(mag)}*i"
    return f"({format_rational(re)}{sign}{piece})"


def _monomial(space, exps):
    parts = []
    for name, e in zip(space.names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def print_poly(p):
    """Canonical text: graded-lex descending terms, parse(print(p)) == p."""
    if p.is_zero():
        return "0"
    pieces = []
    for exps, coeff in p.terms():
        mono = _monomial(p.space, exps)
        if coeff.is_real():
            re = coeff.re
            negative = re < 0
            mag = -re if negative else re
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            pieces.append(("-" if negative else "+", body))
        else:
            body = format_gaussian(coeff)
            if mono:
                body = f"{body}*{mono}"
            pieces.append(("+", body))
    sign, body = pieces[0]
    out = [f"-{body}" if sign == "-" else body]
    for sign, body in pieces[1:]:
        out.append(f" {sign} {body}")
    return "".join(out)
