"""Parsing of q-expressions and algebra expressions.

The grammar is small::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" unary)?
    atom   := number | "q" | "i" | E<k> | F<k> | K<k> | "(" expr ")"

``**`` is accepted as a synonym for ``^``. A bare ``E``, ``F`` or ``K`` means
index 1. The same tree can be evaluated exactly to a :class:`QRat`, to a
float/complex at a numeric q, or (with generators) to a free-algebra element.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .qfield import Q, QRat, qrat


class ParseError(ValueError):
    pass


_TOKEN = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>\*\*|[-+*/^()]))"
)
_GEN = re.compile(r"^([EFK])(\d*)$")


def tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:pos + 1]!r} at {pos} in {text!r}")
        pos = m.end()
        if m.group("num") is not None:
            out.append(("num", m.group("num")))
        elif m.group("name") is not None:
            out.append(("name", m.group("name")))
        else:
            op = m.group("op")
            out.append(("op", "^" if op == "**" else op))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t != ("op", op):
            raise ParseError(f"expected {op!r} in {self.text!r}")

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        node = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input {self.toks[self.i][1]!r} in {self.text!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            node = ("add" if op == "+" else "sub", node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            node = ("mul" if op == "*" else "div", node, self.unary())
        return node

    def unary(self):
        t = self.peek()
        if t == ("op", "-"):
            self.take()
            return ("neg", self.unary())
        if t == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            return ("pow", base, self.unary())
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            if re.fullmatch(r"\d+", val):
                return ("num", int(val))
            return ("num", Fraction(val))
        if kind == "name":
            if val == "q":
                return ("q",)
            if val == "i":
                return ("i",)
            m = _GEN.match(val)
            if m:
                idx = int(m.group(2)) if m.group(2) else 1
                if idx < 1:
                    raise ParseError(f"generator index must be >= 1: {val}")
                return ("gen", m.group(1), idx)
            raise ParseError(f"unknown name {val!r} in {self.text!r}")
        if (kind, val) == ("op", "("):
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def parse(text: str):
    """Parse to an expression tree (nested tuples)."""
    return _Parser(text).parse()


def has_generators(node) -> bool:
    if node[0] == "gen":
        return True
    return any(has_generators(c) for c in node[1:] if isinstance(c, tuple))


# ---------------------------------------------------------------------------
# exact scalar evaluation

def _exact_exponent(node):
    e = eval_exact(node)
    if not e.is_constant():
        raise ParseError("exponent must be a constant")
    c = e.constant()
    if isinstance(c, Fraction) and c.denominator != 1:
        raise ParseError(f"non-integer exponent {c} needs numeric mode")
    return int(c)


def eval_exact(node) -> QRat:
    tag = node[0]
    if tag == "num":
        return qrat(node[1])
    if tag == "q":
        return Q
    if tag == "i":
        raise ParseError("the imaginary unit is only available in numeric mode")
    if tag == "gen":
        raise ParseError(f"generator {node[1]}{node[2]} in a scalar expression")
    if tag == "neg":
        return -eval_exact(node[1])
    if tag == "pow":
        return eval_exact(node[1]) ** _exact_exponent(node[2])
    a, b = eval_exact(node[1]), eval_exact(node[2])
    if tag == "add":
        return a + b
    if tag == "sub":
        return a - b
    if tag == "mul":
        return a * b
    if b.is_zero():
        raise ZeroDivisionError("division by zero in expression")
    return a / b


def parse_qrat(text: str) -> QRat:
    return eval_exact(parse(text))


# ---------------------------------------------------------------------------
# numeric evaluation

def eval_numeric(node, q0):
    tag = node[0]
    if tag == "num":
        return float(node[1])
    if tag == "q":
        return q0
    if tag == "i":
        return 1j
    if tag == "gen":
        raise ParseError(f"generator {node[1]}{node[2]} in a scalar expression")
    if tag == "neg":
        return -eval_numeric(node[1], q0)
    a, b = eval_numeric(node[1], q0), eval_numeric(node[2], q0)
    if tag == "pow":
        if isinstance(b, complex) or (isinstance(a, (int, float)) and a < 0 and b != int(b)):
            return complex(a) ** b
        return a ** b
    if tag == "add":
        return a + b
    if tag == "sub":
        return a - b
    if tag == "mul":
        return a * b
    return a / b


def parse_number(text: str, q0=None):
    """Parse a scalar to float or complex; ``q`` needs ``q0``."""
    node = parse(text)
    if q0 is None and _mentions_q(node):
        raise ParseError(f"{text!r} mentions q but no numeric q was given")
    val = eval_numeric(node, q0)
    if isinstance(val, complex) and val.imag == 0:
        return val.real
    return val


def _mentions_q(node):
    if node[0] == "q":
        return True
    return any(_mentions_q(c) for c in node[1:] if isinstance(c, tuple))


def parse_scalar(text: str, q0=None, exact=True):
    """Exact QRat when ``exact`` and the text allows it, else a number."""
    node = parse(text)
    if exact:
        try:
            return eval_exact(node)
        except ParseError:
            if q0 is None:
                raise
    return parse_number(text, q0)


# ---------------------------------------------------------------------------
# printing helpers

Q_MINUS_INV = "(q - q^-1)"


def _laurent_factor(p):
    """String for a Laurent polynomial used as a product factor (no sign handling)."""
    s = str(p)
    if len(p.coeffs) > 1:
        return f"({s})"
    return s


def _split_sign(x: QRat):
    """(negative, |x|) using the sign of the top coefficient of the numerator."""
    if x.num.leading() < 0:
        return True, -x
    return False, x


def coefficient_parts(x: QRat):
    """Return (negative, text) for a nonzero coefficient; text is '' for 1."""
    neg, a = _split_sign(x)
    if a.is_laurent():
        if a.num == 1:
            return neg, ""
        return neg, _laurent_factor(a.num)
    d = _power_of_q2m1(a.den)
    if d:
        lp = a.num.shift(-d)
        tail = f"{Q_MINUS_INV}^-{d}"
        if lp == 1:
            return neg, tail
        return neg, f"{_laurent_factor(lp)}*{tail}"
    num = str(a.num)
    if len(a.num.coeffs) > 1:
        num = f"({num})"
    return neg, f"({num}/({a.den}))"


_Q2M1 = {}


def _power_of_q2m1(den):
    """d if den == (q^2 - 1)^d, else 0."""
    deg = den.high
    if deg % 2 or den.low != 0:
        return 0
    d = deg // 2
    ref = _Q2M1.get(d)
    if ref is None:
        from .qfield import LaurentPoly
        ref = _Q2M1[d] = LaurentPoly({2: 1, 0: -1}) ** d
    return d if den == ref else 0


def join_terms(parts):
    """Join (negative, body) pairs into a signed sum."""
    if not parts:
        return "0"
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def format_scalar(x) -> str:
    """Print an exact scalar in the same style as algebra coefficients."""
    x = qrat(x)
    if x.is_laurent():
        return str(x.num)
    neg, body = coefficient_parts(x)
    return ("-" if neg else "") + (body or "1")
