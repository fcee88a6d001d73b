"""Recursive-descent parser and printer for coefficient expressions.

Grammar (whitespace is ignored)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := base ('^' uint)?
    base   := 'x' | uint | 'sqrt' '(' uint ')' | '(' expr ')'

A leading minus is accepted at the start of every ``expr``, so ``-(x+3)``
and ``(-1)`` both parse.  A :class:`Session` pins the square root used by a
whole query; a second, different radicand raises :class:`MixedRadicals`.
"""

import re
from fractions import Fraction

from .errors import DivisionByZeroFunction, MixedRadicals, ParseError
from .ratfunc import RatFunc
from .scalar import QuadraticNumber, is_rational, sqrt_scalar, radicand

_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt)|(x)|([-+*/^(),]))")


class Session:
    """Shared parse state: the square-free radicand in use, 0 while rational."""

    def __init__(self):
        self.radicand = 0

    def adopt(self, d, offset):
        if d == 0:
            return
        if self.radicand and self.radicand != d:
            raise MixedRadicals(
                f"sqrt({d}) at offset {offset} conflicts with sqrt({self.radicand})"
            )
        self.radicand = d


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text[pos:]) - len(text[pos:].lstrip()) + pos
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = m.lastindex
        value = m.group(kind)
        tokens.append((("int", "sqrt", "x", "op")[kind - 1], value, m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, session):
        self.tokens = _tokenize(text)
        self.i = 0
        self.session = session

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, off = self.take()
        if v != value:
            found = "end of input" if kind == "end" else repr(v)
            raise ParseError(f"expected {value!r}, found {found}", off)

    def expr(self):
        negate = False
        if self.peek()[1] == "-":
            self.take()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[1] in ("*", "/"):
            _, op, off = self.take()
            rhs = self.factor()
            if op == "*":
                acc = acc * rhs
            else:
                if rhs.is_zero():
                    raise DivisionByZeroFunction("division by the zero function", off)
                acc = acc / rhs
        return acc

    def factor(self):
        b = self.base()
        if self.peek()[1] == "^":
            self.take()
            kind, v, off = self.take()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", off)
            b = b ** int(v)
        return b

    def base(self):
        kind, v, off = self.take()
        if kind == "x":
            return RatFunc.x()
        if kind == "int":
            return RatFunc(int(v))
        if kind == "sqrt":
            self.expect("(")
            k, n, noff = self.take()
            if k != "int":
                raise ParseError("sqrt takes a non-negative integer literal", noff)
            self.expect(")")
            root = sqrt_scalar(int(n))
            self.session.adopt(radicand(root), off)
            return RatFunc(root)
        if v == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        found = "end of input" if kind == "end" else repr(v)
        raise ParseError(f"unexpected {found}", off)


def parse_ratfunc(text, session=None):
    """Parse ``text`` into a reduced :class:`RatFunc`."""
    p = _Parser(text, session if session is not None else Session())
    out = p.expr()
    kind, v, off = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {v!r}", off)
    return out


def parse_scalar(text, session=None):
    """Parse a constant expression (no ``x``) into a scalar."""
    R = parse_ratfunc(text, session)
    if not R.is_constant():
        raise ParseError("expected a constant, found an expression in x", 0)
    return R.constant_value()


def parse_pair(text, session=None):
    """Parse initial values written ``a,b``."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError("initial values must be written 'a,b'", 0)
    session = session if session is not None else Session()
    first = parse_scalar(parts[0], session)
    try:
        second = parse_scalar(parts[1], session)
    except ParseError as exc:
        shift = len(parts[0]) + 1
        raise type(exc)(str(exc).rsplit(" at offset", 1)[0], exc.offset + shift) from None
    return first, second


# -- printing ----------------------------------------------------------------

def format_coefficient(c):
    if isinstance(c, QuadraticNumber):
        a = "" if c.a == 0 else format_coefficient(c.a)
        mag = abs(c.b)
        root = f"sqrt({c.d})" if mag == 1 else f"{format_coefficient(mag)}*sqrt({c.d})"
        if not a:
            return root if c.b > 0 else f"-{root}"
        return f"{a}{'+' if c.b > 0 else '-'}{root}"
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p):
    """Render a :class:`Poly` in the parser's grammar."""
    if p.is_zero():
        return "0"
    out = []
    for k in range(p.degree, -1, -1):
        c = p.c[k]
        if c == 0:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if is_rational(c):
            neg = c < 0
            mag = format_coefficient(abs(c))
            if mono:
                body = mono if mag == "1" else f"{mag}*{mono}"
            else:
                body = mag
        else:
            neg = False
            body = f"({format_coefficient(c)})" + (f"*{mono}" if mono else "")
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def format_ratfunc(R):
    """Render a :class:`RatFunc`; the output parses back to an equal value."""
    num = format_poly(R.num)
    if R.den.degree == 0 and R.den.c[0] == 1:
        return num
    return f"({num})/({format_poly(R.den)})"
