"""Two scalar flavors for module parameters: exact QRat, or numbers at a fixed q0.

Downstream code is written once against a context object that knows how to
build q-powers, embed exact coefficients and test for zero.
"""

from __future__ import annotations

import cmath
import math
import numbers

from .qfield import Q, QRat, eval_at, qrat, is_exact


class ExactContext:
    exact = True
    q0 = None

    def qpow(self, e):
        return Q ** e

    def coerce(self, x):
        return qrat(x)

    def embed(self, x):
        return qrat(x)

    def is_zero(self, x, tol=None):
        return qrat(x).is_zero()

    def close(self, a, b, tol=None):
        return qrat(a) == qrat(b)

    def __repr__(self):
        return "ExactContext()"


class NumericContext:
    """Scalars are Python floats/complex numbers; q is the real number q0."""

    exact = False

    def __init__(self, q0: float, tol: float = 1e-9):
        q0 = float(q0)
        if not (0 < q0 < 1):
            raise ValueError(f"numeric q must lie in (0, 1), got {q0}")
        self.q0 = q0
        self.tol = tol

    def qpow(self, e):
        return self.q0 ** e

    def coerce(self, x):
        if is_exact(x):
            return eval_at(x, self.q0)
        if isinstance(x, numbers.Number):
            return x
        raise TypeError(f"cannot use {type(x).__name__} as a numeric scalar")

    embed = coerce

    def is_zero(self, x, tol=None):
        return abs(x) <= (self.tol if tol is None else tol)

    def close(self, a, b, tol=None):
        tol = self.tol if tol is None else tol
        return abs(a - b) <= tol * max(1.0, abs(a), abs(b))

    def __repr__(self):
        return f"NumericContext(q0={self.q0})"


EXACT = ExactContext()


def context_for(q0=None, tol=1e-9):
    return EXACT if q0 is None else NumericContext(q0, tol)


def to_json_scalar(x):
    """JSON-friendly rendering: exact values as strings, complex as [re, im]."""
    from .expr import format_scalar

    if isinstance(x, QRat) or is_exact(x):
        return format_scalar(x)
    if isinstance(x, complex):
        if x.imag == 0:
            return x.real
        return [x.real, x.imag]
    if isinstance(x, float) and (math.isnan(x) or math.isinf(x)):
        return str(x)
    return x


def real_part(x):
    if isinstance(x, complex):
        return x.real
    return float(x)


def is_real(x, tol=1e-12):
    if isinstance(x, complex):
        return abs(x.imag) <= tol * max(1.0, abs(x.real))
    return True


def numeric_log(x):
    return cmath.log(x) if isinstance(x, complex) or x < 0 else math.log(x)


class SympyContext:
    """Symbolic scalars in the rational function field Q(q, *names) via sympy.

    Elements are sympy FracField elements, so sums and products stay
    canonical and zero tests are exact.
    """

    exact = True
    q0 = None

    def __init__(self, names=("lam", "M")):
        from sympy import QQ
        from sympy.polys.fields import field

        self.field, self.q, *self.symbols = field(("q",) + tuple(names), QQ)

    def qpow(self, e):
        return self.q ** e

    def coerce(self, x):
        if isinstance(x, QRat):
            num = sum((c * self.q ** e for e, c in x.num.coeffs.items()), self.field.zero)
            den = sum((c * self.q ** e for e, c in x.den.coeffs.items()), self.field.zero)
            return num / den
        return self.field(x)

    embed = coerce

    def is_zero(self, x, tol=None):
        return x == 0

    def close(self, a, b, tol=None):
        return a == b
