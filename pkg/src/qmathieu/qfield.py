"""Exact arithmetic in Q(q): Laurent polynomials, rational functions and q-combinatorics.

Coefficients are Python ints or :class:`fractions.Fraction`. Both classes are
immutable and hashable, and equality is structural equality of canonical
forms.
"""

from __future__ import annotations

import math
import numbers
from fractions import Fraction
from functools import lru_cache, reduce

from ._kernels import poly_mul as _conv


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a zero of its denominator."""


def _norm_coeff(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _as_rational(c):
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, (int, Fraction)):
        return c
    if isinstance(c, numbers.Rational):
        return Fraction(c.numerator, c.denominator)
    raise TypeError(f"expected a rational coefficient, got {type(c).__name__}")


class LaurentPoly:
    """Element of Q[q, q^-1].

    Stored densely: ``low`` is the lowest exponent and ``_c`` the tuple of
    coefficients from exponent ``low`` upwards. The first and last
    coefficients are nonzero; the zero polynomial has ``_c == ()``.
    """

    __slots__ = ("low", "_c", "_hash")

    def __init__(self, coeffs=None):
        if coeffs is None:
            self.low, self._c = 0, ()
        elif isinstance(coeffs, LaurentPoly):
            self.low, self._c = coeffs.low, coeffs._c
        elif isinstance(coeffs, dict):
            items = {e: _as_rational(c) for e, c in coeffs.items() if c != 0}
            if not items:
                self.low, self._c = 0, ()
            else:
                lo, hi = min(items), max(items)
                self.low = lo
                self._c = tuple(_norm_coeff(items.get(e, 0)) for e in range(lo, hi + 1))
        else:
            c = _as_rational(coeffs)
            self.low, self._c = (0, (_norm_coeff(c),)) if c != 0 else (0, ())
        self._hash = None

    @classmethod
    def _make(cls, low, coeffs):
        """Build from a dense coefficient list, trimming zeros at both ends."""
        lo, hi = 0, len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        p = object.__new__(cls)
        if lo == hi:
            p.low, p._c = 0, ()
        else:
            p.low = low + lo
            p._c = tuple(_norm_coeff(c) for c in coeffs[lo:hi])
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls._make(exp, [_as_rational(coeff)])

    # -- structure --------------------------------------------------------
    @property
    def coeffs(self):
        """Sparse map exponent -> nonzero coefficient."""
        return {self.low + i: c for i, c in enumerate(self._c) if c != 0}

    @property
    def high(self):
        return self.low + len(self._c) - 1

    def is_zero(self):
        return not self._c

    def is_constant(self):
        return not self._c or (len(self._c) == 1 and self.low == 0)

    def is_monomial(self):
        return len(self._c) == 1

    def constant(self):
        if not self._c:
            return 0
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._c[0]

    def leading(self):
        return self._c[-1]

    def terms(self):
        """(exponent, coefficient) pairs in descending exponent order."""
        return [(self.low + i, c) for i in range(len(self._c) - 1, -1, -1)
                if (c := self._c[i]) != 0]

    def shift(self, k):
        if not self._c or k == 0:
            return self
        p = object.__new__(LaurentPoly)
        p.low, p._c, p._hash = self.low + k, self._c, None
        return p

    def scale(self, c):
        c = _as_rational(c)
        if c == 0:
            return LaurentPoly()
        if c == 1:
            return self
        return LaurentPoly._make(self.low, [x * c for x in self._c])

    def substitute_inverse(self):
        """p(q) -> p(q^-1)."""
        return LaurentPoly._make(-self.high, list(reversed(self._c)))

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)) or isinstance(other, numbers.Rational):
            return LaurentPoly(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._c:
            return self
        if not self._c:
            return o
        lo = min(self.low, o.low)
        hi = max(self.high, o.high)
        out = [0] * (hi - lo + 1)
        off = self.low - lo
        for i, c in enumerate(self._c):
            out[off + i] = c
        off = o.low - lo
        for i, c in enumerate(o._c):
            out[off + i] += c
        return LaurentPoly._make(lo, out)

    __radd__ = __add__

    def __neg__(self):
        p = object.__new__(LaurentPoly)
        p.low, p._c, p._hash = self.low, tuple(-c for c in self._c), None
        return p

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._c or not o._c:
            return LaurentPoly()
        if len(o._c) == 1:
            c = o._c[0]
            return LaurentPoly._make(self.low + o.low, [x * c for x in self._c])
        if len(self._c) == 1:
            c = self._c[0]
            return LaurentPoly._make(self.low + o.low, [x * c for x in o._c])
        return LaurentPoly._make(self.low + o.low, _conv(self._c, o._c))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have inverses in Q[q, q^-1]")
            c = self._c[0]
            return LaurentPoly._make(self.low * k, [Fraction(1) / c ** (-k)])
        result = LaurentPoly(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divexact(self, other):
        """Exact quotient ``self / other``; raises ValueError on a nonzero remainder."""
        other = self._coerce(other)
        if not other._c:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._c:
            return LaurentPoly()
        num = list(self._c)
        den = other._c
        dl = len(den)
        if len(num) < dl:
            raise ValueError("inexact Laurent division")
        lead = Fraction(den[-1]) if not isinstance(den[-1], int) or den[-1] not in (1, -1) else den[-1]
        quot = [0] * (len(num) - dl + 1)
        for i in range(len(num) - dl, -1, -1):
            c = num[i + dl - 1]
            if c == 0:
                continue
            t = c / lead if lead not in (1, -1) else c * lead
            quot[i] = t
            for j in range(dl):
                num[i + j] -= t * den[j]
        if any(num):
            raise ValueError("inexact Laurent division")
        return LaurentPoly._make(self.low - other.low, quot)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.low == other.low and self._c == other._c
        if isinstance(other, QRat):
            return other == self
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.low == o.low and self._c == o._c

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant())
            else:
                self._hash = hash((self.low, self._c))
        return self._hash

    # -- evaluation -------------------------------------------------------
    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        """Horner evaluation at ``x`` (any ring element supporting * and +)."""
        if not self._c:
            return 0
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        if self.low:
            acc = acc * x ** self.low
        return acc

    # -- printing ---------------------------------------------------------
    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, c in self.terms():
            neg = c < 0
            a = -c if neg else c
            if e == 0:
                body = str(a)
            else:
                qs = "q" if e == 1 else f"q^{e}"
                body = qs if a == 1 else f"{a}*{qs}"
            parts.append((neg, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"LaurentPoly({self})"


# ---------------------------------------------------------------------------
# integer polynomial helpers (ascending coefficient lists, nonzero leading)

def _content(a):
    return reduce(math.gcd, a, 0)


def _primitive(a):
    g = _content(a)
    if a[-1] < 0:
        g = -g
    if g in (1,):
        return a
    return [x // g for x in a]


def _prem(a, b):
    """Remainder of ``lc(b)^k * a`` by ``b`` (a scalar multiple of the true pseudo-remainder)."""
    a = list(a)
    lb = len(b)
    lcb = b[-1]
    while len(a) >= lb:
        lca = a[-1]
        s = len(a) - lb
        if lcb != 1:
            a = [x * lcb for x in a]
        for i in range(lb - 1):
            a[s + i] -= lca * b[i]
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _int_poly_gcd(a, b):
    """Primitive gcd over Z[q] with positive leading coefficient."""
    if len(a) < len(b):
        a, b = b, a
    a, b = _primitive(a), _primitive(b)
    while len(b) > 1:
        r = _prem(a, b)
        if not r:
            return b
        a, b = b, _primitive(r)
    return [1] if b else a


def _int_divexact(a, b):
    a = list(a)
    lb = len(b)
    lcb = b[-1]
    q = [0] * (len(a) - lb + 1)
    for i in range(len(a) - lb, -1, -1):
        c = a[i + lb - 1]
        if c == 0:
            continue
        t, r = divmod(c, lcb)
        if r:
            raise ArithmeticError("inexact integer polynomial division")
        q[i] = t
        for j in range(lb):
            a[i + j] -= t * b[j]
    return q


def _split_rational(p):
    """Return (scalar, low, ints) with p == scalar * q^low * sum(ints[i] q^i), ints primitive."""
    coeffs = p._c
    den = 1
    for c in coeffs:
        if type(c) is Fraction:
            den = den * c.denominator // math.gcd(den, c.denominator)
    if den == 1:
        ints = list(coeffs)
    else:
        ints = [int(c * den) for c in coeffs]
    g = _content(ints)
    if ints[-1] < 0:
        g = -g
    if g != 1:
        ints = [x // g for x in ints]
    scalar = Fraction(g, den) if den != 1 else g
    return scalar, p.low, ints


_ONE = LaurentPoly(1)


class QRat:
    """Element of Q(q) in canonical form ``num / den``.

    ``den`` is an integer polynomial with nonzero constant term, content 1
    and positive leading coefficient; ``num`` and ``den`` are coprime.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None):
        if isinstance(num, QRat) and den is None:
            self.num, self.den, self._hash = num.num, num.den, num._hash
            return
        n = num if isinstance(num, LaurentPoly) else _to_laurent(num)
        if den is None:
            self.num, self.den, self._hash = n, _ONE, None
            return
        if isinstance(den, QRat) or isinstance(num, QRat):
            r = QRat(num) / QRat(den)
            self.num, self.den, self._hash = r.num, r.den, None
            return
        d = den if isinstance(den, LaurentPoly) else LaurentPoly(den)
        self.num, self.den = _canonical(n, d)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        r = object.__new__(cls)
        r.num, r.den, r._hash = num, den, None
        return r

    @classmethod
    def q(cls):
        return Q

    # -- predicates -------------------------------------------------------
    def is_zero(self):
        return not self.num._c

    def is_laurent(self):
        return self.den is _ONE or self.den == _ONE

    def as_laurent(self):
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def is_constant(self):
        return self.is_laurent() and self.num.is_constant()

    def constant(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a rational constant")
        return self.num.constant()

    def monomial_form(self):
        """Return (c, e) when self == c * q^e, else None."""
        if self.is_laurent() and self.num.is_monomial():
            return self.num._c[0], self.num.low
        return None

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, QRat):
            return other
        if isinstance(other, LaurentPoly):
            return QRat._raw(other, _ONE)
        if isinstance(other, bool):
            other = int(other)
        if isinstance(other, (int, Fraction)) or isinstance(other, numbers.Rational):
            return QRat._raw(LaurentPoly(other), _ONE)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num._c:
            return self
        if not self.num._c:
            return o
        if self.den == o.den:
            if self.den is _ONE or self.den == _ONE:
                return QRat._raw(self.num + o.num, _ONE)
            return QRat._from(self.num + o.num, self.den)
        return QRat._from(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return QRat._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num._c or not o.num._c:
            return ZERO
        if o.den == _ONE:
            if self.den == _ONE:
                return QRat._raw(self.num * o.num, _ONE)
            if o.num.is_monomial():
                return QRat._raw(self.num * o.num, self.den)
        elif self.den == _ONE and self.num.is_monomial():
            return QRat._raw(self.num * o.num, o.den)
        return QRat._from(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num._c:
            raise ZeroDivisionError("QRat division by zero")
        if self.num.is_monomial():
            c, e = self.num._c[0], self.num.low
            inv = c if c in (1, -1) else Fraction(1) / c
            return QRat._raw(self.den.shift(-e).scale(inv), _ONE)
        return QRat._from(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return ONE
        if self.num.is_monomial() and self.den == _ONE:
            c, e = self.num._c[0], self.num.low
            return QRat._raw(LaurentPoly.monomial(e * k, c ** k), _ONE)
        # num^k and den^k stay coprime and den^k stays primitive (Gauss)
        return QRat._raw(self.num ** k, self.den ** k)

    @classmethod
    def _from(cls, num, den):
        n, d = _canonical(num, den)
        return cls._raw(n, d)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            if self.den == _ONE:
                self._hash = hash(self.num)
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num._c)

    # -- evaluation -------------------------------------------------------
    def eval_at(self, q0):
        return eval_at(self, q0)

    def conjugate(self):
        # rational functions of a real parameter are self-conjugate
        return self

    # -- printing ---------------------------------------------------------
    def __str__(self):
        if self.den == _ONE:
            return str(self.num)
        n = str(self.num)
        if len(self.num._c) > 1 and sum(1 for c in self.num._c if c) > 1:
            n = f"({n})"
        return f"{n}/({self.den})"

    def __repr__(self):
        return f"QRat({self})"


def _to_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly(x)


def _canonical(num, den):
    if not den._c:
        raise ZeroDivisionError("QRat with zero denominator")
    if not num._c:
        return LaurentPoly(), _ONE
    dscal, dlow, dints = _split_rational(den)
    if len(dints) == 1:
        return num.shift(-dlow).scale(Fraction(1) / dscal if not isinstance(dscal, int) or dscal not in (1, -1) else dscal), _ONE
    nscal, nlow, nints = _split_rational(num)
    g = _int_poly_gcd(nints, dints)
    if len(g) > 1:
        nints = _int_divexact(nints, g)
        dints = _int_divexact(dints, g)
        if dints[-1] < 0:
            dints = [-x for x in dints]
            nscal = -nscal
    scal = Fraction(nscal) / dscal
    n = LaurentPoly._make(nlow - dlow, [c * scal for c in nints])
    d = _ONE if len(dints) == 1 and dints[0] == 1 else LaurentPoly._make(0, dints)
    return n, d


ZERO = QRat(0)
ONE = QRat(1)
Q = QRat._raw(LaurentPoly.monomial(1), _ONE)


def qrat(x):
    """Coerce an int, Fraction, LaurentPoly or QRat to QRat."""
    r = QRat._coerce(x)
    if r is None:
        raise TypeError(f"cannot coerce {type(x).__name__} to QRat")
    return r


def is_exact(x):
    return isinstance(x, (QRat, LaurentPoly, int, Fraction)) and not isinstance(x, bool)


# ---------------------------------------------------------------------------
# numeric evaluation

def _eval_exact(p: LaurentPoly, x: Fraction):
    acc = Fraction(0)
    for c in reversed(p._c):
        acc = acc * x + c
    if p.low:
        acc *= x ** p.low
    return acc


@lru_cache(maxsize=65536)
def _eval_cached(num, den, q0):
    x = Fraction(q0)
    d = _eval_exact(den, x)
    if d == 0:
        raise PoleError(f"denominator vanishes at q = {q0}")
    return _eval_exact(num, x) / d


def eval_at(x, q0):
    """Evaluate a rational function at a real (or complex) point.

    Real ``q0`` is converted to an exact rational first, so the only
    rounding happens in the final conversion to float.
    """
    r = qrat(x)
    if isinstance(q0, complex):
        d = r.den.evaluate(q0)
        if d == 0:
            raise PoleError(f"denominator vanishes at q = {q0}")
        return r.num.evaluate(q0) / d
    if r.num.is_zero():
        return 0.0
    if r.den == _ONE and r.num.is_constant():
        return float(r.num.constant())
    val = _eval_cached(r.num, r.den, q0)
    if isinstance(q0, (int, Fraction)):
        return val
    return float(val)


# ---------------------------------------------------------------------------
# q-combinatorics

QMINUS = Q - Q ** -1  # q - q^-1


@lru_cache(maxsize=None)
def qint(j: int) -> QRat:
    """Symmetric q-integer [j]_q = (q^j - q^-j) / (q - q^-1)."""
    if j < 0:
        raise ValueError("qint requires j >= 0")
    r = (Q ** j - Q ** -j) / QMINUS
    assert r.is_laurent()
    return r


@lru_cache(maxsize=None)
def qfactorial(k: int) -> QRat:
    if k < 0:
        raise ValueError("qfactorial requires k >= 0")
    out = ONE
    for j in range(1, k + 1):
        out = out * qint(j)
    return out


@lru_cache(maxsize=None)
def qbinomial(n: int, k: int) -> QRat:
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"qbinomial requires 0 <= k <= n, got n={n}, k={k}")
    return qfactorial(n) / (qfactorial(k) * qfactorial(n - k))


def qshifted_factorial(a, base, n: int):
    """(a; base)_n = prod_{k=0}^{n-1} (1 - a * base^k) for any scalar type."""
    if n < 0:
        raise ValueError("qshifted_factorial requires n >= 0")
    out = 1
    term = a
    for _ in range(n):
        out = out * (1 - term)
        term = term * base
    return out
