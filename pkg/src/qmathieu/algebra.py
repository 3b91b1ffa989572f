"""U_q(sl(n+1)) as linear combinations of triangular monomials E-word * K^l * F-word.

Indices are 1-based in every public function and in printed output; the
stored monomials use 0-based tuples ``(eword, kexp, fword)`` so they can be
handed straight to the rewriting kernels.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import NamedTuple

from . import expr as _expr
from ._kernels import canonical_word, mono_mul as _k_mono_mul, normalize_letters as _k_normalize
from .qfield import ONE, ZERO, LaurentPoly, Q, QRat, qrat

E, K, F = 0, 1, 2
_KIND = {"E": E, "K": K, "F": F}
_NAME = "EKF"


class AlgebraError(ValueError):
    pass


class InhomogeneousError(AlgebraError):
    def __init__(self, roots):
        self.roots = sorted(roots)
        super().__init__("inhomogeneous element with roots " + ", ".join(str(r) for r in self.roots))


class CartanData:
    """Type A_n Cartan data; d_i = 1 so the bilinear form is the matrix itself."""

    __slots__ = ("rank", "A")

    def __init__(self, rank: int):
        if not isinstance(rank, int) or rank < 1:
            raise AlgebraError(f"rank must be a positive integer, got {rank!r}")
        self.rank = rank
        self.A = tuple(
            tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(rank))
            for i in range(rank)
        )

    def a(self, i: int, j: int) -> int:
        """Cartan entry for 1-based indices."""
        return self.A[i - 1][j - 1]

    def form(self, x, y) -> int:
        return sum(x[i] * self.A[i][j] * y[j] for i in range(self.rank) for j in range(self.rank) if x[i] and y[j])

    def commute(self, i: int, j: int) -> bool:
        return self.A[i - 1][j - 1] == 0

    def check_index(self, i: int):
        if not (1 <= i <= self.rank):
            raise AlgebraError(f"index {i} out of range for rank {self.rank}")

    def __eq__(self, other):
        return isinstance(other, CartanData) and other.rank == self.rank

    def __hash__(self):
        return hash(("A", self.rank))

    def __repr__(self):
        return f"CartanData(rank={self.rank})"


@lru_cache(maxsize=None)
def cartan(rank: int) -> CartanData:
    return CartanData(rank)


class RootVector(tuple):
    """Element sum b_i alpha_i of the root lattice, stored as the tuple (b_1..b_n)."""

    def __new__(cls, coeffs):
        return super().__new__(cls, tuple(int(c) for c in coeffs))

    @classmethod
    def zero(cls, n):
        return cls((0,) * n)

    @classmethod
    def simple(cls, n, i):
        return cls(tuple(1 if j == i - 1 else 0 for j in range(n)))

    def __add__(self, other):
        return RootVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return RootVector(a - b for a, b in zip(self, other))

    def __neg__(self):
        return RootVector(-a for a in self)

    def height(self, i: int) -> int:
        return self[i - 1]

    def is_positive(self) -> bool:
        """Membership in Q^+ (all coefficients nonnegative)."""
        return all(b >= 0 for b in self)

    def is_zero(self) -> bool:
        return not any(self)

    def __str__(self):
        parts = []
        for i, b in enumerate(self, 1):
            if b:
                parts.append((b < 0, (f"{abs(b)}*" if abs(b) != 1 else "") + f"alpha{i}"))
        return _expr.join_terms(parts)

    def __repr__(self):
        return f"RootVector({tuple(self)})"


class TriMonomial(NamedTuple):
    """E-word * K^kexp * F-word with 0-based letters."""

    eword: tuple
    kexp: tuple
    fword: tuple

    def e_root(self) -> RootVector:
        return _word_root(self.eword, len(self.kexp))

    def f_root(self) -> RootVector:
        return _word_root(self.fword, len(self.kexp))

    def root(self) -> RootVector:
        return self.e_root() - self.f_root()

    def __str__(self):
        return monomial_str(self)


def _word_root(word, n):
    out = [0] * n
    for x in word:
        out[x] += 1
    return RootVector(out)


def _runs(word):
    out = []
    for x in word:
        if out and out[-1][0] == x:
            out[-1][1] += 1
        else:
            out.append([x, 1])
    return out


def monomial_str(m) -> str:
    e, k, f = m
    parts = []
    for x, p in _runs(e):
        parts.append(f"E{x + 1}" + (f"^{p}" if p != 1 else ""))
    for i, p in enumerate(k):
        if p:
            parts.append(f"K{i + 1}" + (f"^{p}" if p != 1 else ""))
    for x, p in _runs(f):
        parts.append(f"F{x + 1}" + (f"^{p}" if p != 1 else ""))
    return "*".join(parts)


# ---------------------------------------------------------------------------
# kernel coefficient conversion

_QM1 = LaurentPoly({1: 1, 0: -1})
_QP1 = LaurentPoly({1: 1, 0: 1})
_Q2M1 = LaurentPoly({2: 1, 0: -1})


@lru_cache(maxsize=None)
def _q2m1_pow(d):
    return _Q2M1 ** d


@lru_cache(maxsize=None)
def _den_pow(a, b):
    return _QM1 ** a * _QP1 ** b


@lru_cache(maxsize=200000)
def _coef_from_items(items) -> QRat:
    """QRat for sum c * q^a / (q - q^-1)^d over ``items = ((d, a), c)...``."""
    D = max(d for (d, _), _ in items)
    total = LaurentPoly()
    for (d, a), c in items:
        total = total + (_q2m1_pow(D - d) * LaurentPoly.monomial(a + d, c))
    if total.is_zero():
        return ZERO
    if D == 0:
        return qrat(total)
    a = b = D
    while a and total.evaluate(1) == 0:
        total = total.divexact(_QM1)
        a -= 1
    while b and total.evaluate(-1) == 0:
        total = total.divexact(_QP1)
        b -= 1
    if a == 0 and b == 0:
        return qrat(total)
    return QRat._raw(total, _den_pow(a, b))


def _coef(cmap) -> QRat:
    return _coef_from_items(tuple(sorted(cmap.items())))


# ---------------------------------------------------------------------------
# Element

class Element:
    """Finite QRat-linear combination of normal-form monomials."""

    __slots__ = ("cartan", "terms", "_hash")

    def __init__(self, cartan_data: CartanData, terms=None):
        self.cartan = cartan_data
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = qrat(c)
                if not c.is_zero():
                    self.terms[tuple(m)] = c
        self._hash = None

    @classmethod
    def _wrap(cls, cartan_data, terms):
        x = object.__new__(cls)
        x.cartan, x.terms, x._hash = cartan_data, terms, None
        return x

    # constructors
    @classmethod
    def scalar(cls, cartan_data, c=1):
        n = cartan_data.rank
        return cls(cartan_data, {((), (0,) * n, ()): c})

    @classmethod
    def monomial(cls, cartan_data, eword=(), kexp=None, fword=(), coeff=1):
        """Monomial from 1-based letter sequences; the words are canonicalized."""
        n = cartan_data.rank
        for x in list(eword) + list(fword):
            cartan_data.check_index(x)
        kexp = tuple(kexp) if kexp is not None else (0,) * n
        if len(kexp) != n:
            raise AlgebraError("kexp has the wrong length")
        e = canonical_word(tuple(x - 1 for x in eword), cartan_data.A)
        f = canonical_word(tuple(x - 1 for x in fword), cartan_data.A)
        return cls(cartan_data, {(e, kexp, f): coeff})

    # structure
    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.items())

    def items(self):
        """(TriMonomial, coefficient) pairs in printing order."""
        return [(TriMonomial(*m), self.terms[m]) for m in sorted(self.terms, reverse=True)]

    def monomials(self):
        return [m for m, _ in self.items()]

    def coefficient(self, m) -> QRat:
        return self.terms.get(tuple(m), ZERO)

    def _check(self, other):
        if other.cartan != self.cartan:
            raise AlgebraError(f"mixed Cartan data: rank {self.cartan.rank} vs {other.cartan.rank}")

    def _lift(self, other):
        if isinstance(other, Element):
            self._check(other)
            return other
        if isinstance(other, FreeElement):
            self._check(other)
            return other.normalize()
        try:
            c = qrat(other)
        except TypeError:
            return None
        return Element.scalar(self.cartan, c)

    # arithmetic
    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            v = out.get(m)
            v = c if v is None else v + c
            if v.is_zero():
                out.pop(m, None)
            else:
                out[m] = v
        return Element._wrap(self.cartan, out)

    __radd__ = __add__

    def __neg__(self):
        return Element._wrap(self.cartan, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c):
        c = qrat(c)
        if c.is_zero():
            return Element._wrap(self.cartan, {})
        return Element._wrap(self.cartan, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (Element, FreeElement)):
            return mul(self, self._lift(other))
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        c = qrat(other)
        return self.scale(c.inverse())

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise AlgebraError("element powers need a nonnegative integer exponent")
        out = Element.scalar(self.cartan)
        for _ in range(k):
            out = mul(out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.cartan == other.cartan and self.terms == other.terms
        if isinstance(other, FreeElement):
            return self == other.normalize()
        try:
            c = qrat(other)
        except TypeError:
            return NotImplemented
        return self == Element.scalar(self.cartan, c)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.cartan, frozenset(self.terms.items())))
        return self._hash

    def map_coefficients(self, fn):
        return Element(self.cartan, {m: fn(c) for m, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.items():
            neg, coef = _expr.coefficient_parts(c)
            mono = monomial_str(m)
            if not mono:
                body = coef or "1"
            elif not coef:
                body = mono
            else:
                body = f"{coef}*{mono}"
            parts.append((neg, body))
        return _expr.join_terms(parts)

    def __repr__(self):
        return f"Element(rank={self.cartan.rank}, {self})"


# letters --------------------------------------------------------------------

def _letter(kind, i, p=1):
    return (kind, i, p)


def gen(cartan_data: CartanData, name: str, i: int, power: int = 1) -> Element:
    """Generator element E_i, F_i or K_i^power (1-based index)."""
    cartan_data.check_index(i)
    kind = _KIND[name]
    if kind != K and power < 0:
        raise AlgebraError("negative powers exist only for K")
    return _normalize_word(cartan_data, ((kind, i - 1, power),))


def parse_letter(token: str):
    """'E2' -> (E, 1, 1); 'K1^-1' -> (K, 0, -1)."""
    import re

    m = re.fullmatch(r"\s*([EFK])(\d*)\s*(?:\^\s*(-?\d+))?\s*", token)
    if not m:
        raise AlgebraError(f"bad letter {token!r}")
    idx = int(m.group(2)) if m.group(2) else 1
    p = int(m.group(3)) if m.group(3) else 1
    return (_KIND[m.group(1)], idx - 1, p)


def _merge_word(word):
    """Merge adjacent equal letters; drop K^0."""
    out = []
    for kind, i, p in word:
        if out and out[-1][0] == kind and out[-1][1] == i:
            np_ = out[-1][2] + p
            out.pop()
            if np_ != 0 or kind != K:
                if np_:
                    out.append((kind, i, np_))
        elif p or kind != K:
            if p:
                out.append((kind, i, p))
    return tuple(out)


@lru_cache(maxsize=100000)
def _normalize_word_cached(cartan_data, word):
    state = _k_normalize(word, cartan_data.rank, cartan_data.A)
    return {m: _coef(cm) for m, cm in state.items()}


def _normalize_word(cartan_data, word, scalar=ONE):
    for kind, i, p in word:
        if not (0 <= i < cartan_data.rank):
            raise AlgebraError(f"index {i + 1} out of range for rank {cartan_data.rank}")
        if kind != K and p < 0:
            raise AlgebraError("negative powers exist only for K")
    terms = _normalize_word_cached(cartan_data, _merge_word(word))
    scalar = qrat(scalar)
    if scalar == ONE:
        return Element._wrap(cartan_data, dict(terms))
    if scalar.is_zero():
        return Element._wrap(cartan_data, {})
    return Element._wrap(cartan_data, {m: c * scalar for m, c in terms.items()})


class FreeElement:
    """Linear combination of arbitrary words in the generators (not yet normalized).

    Words are tuples of ``(kind, index0, power)`` letters with adjacent equal
    letters merged. Used for parsed input and for checking the rewriting
    engine against representations.
    """

    __slots__ = ("cartan", "terms")

    def __init__(self, cartan_data, terms=None):
        self.cartan = cartan_data
        self.terms = {}
        for w, c in (terms or {}).items():
            c = qrat(c)
            if not c.is_zero():
                w = _merge_word(w)
                self.terms[w] = self.terms.get(w, ZERO) + c
                if self.terms[w].is_zero():
                    del self.terms[w]

    @classmethod
    def word(cls, cartan_data, letters, coeff=1):
        """From letters given as strings ('E1', 'K2^-1') or (kind, index0, power) triples."""
        ls = [parse_letter(x) if isinstance(x, str) else tuple(x) for x in letters]
        for kind, i, p in ls:
            if not (0 <= i < cartan_data.rank):
                raise AlgebraError(f"index {i + 1} out of range for rank {cartan_data.rank}")
        return cls(cartan_data, {tuple(ls): coeff})

    @classmethod
    def scalar(cls, cartan_data, c=1):
        return cls(cartan_data, {(): c})

    def _check(self, other):
        if other.cartan != self.cartan:
            raise AlgebraError("mixed Cartan data")

    def _lift(self, other):
        if isinstance(other, FreeElement):
            self._check(other)
            return other
        if isinstance(other, Element):
            self._check(other)
            return FreeElement.from_element(other)
        try:
            return FreeElement.scalar(self.cartan, qrat(other))
        except TypeError:
            return None

    @classmethod
    def from_element(cls, x: Element):
        terms = {}
        for (e, k, f), c in x.terms.items():
            w = tuple((E, a, 1) for a in e) + tuple((K, i, p) for i, p in enumerate(k) if p) + tuple((F, a, 1) for a in f)
            terms[w] = c
        return cls(x.cartan, terms)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = FreeElement(self.cartan, self.terms)
        for w, c in o.terms.items():
            v = out.terms.get(w, ZERO) + c
            if v.is_zero():
                out.terms.pop(w, None)
            else:
                out.terms[w] = v
        return out

    __radd__ = __add__

    def __neg__(self):
        return FreeElement(self.cartan, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in o.terms.items():
                w = _merge_word(w1 + w2)
                v = out.get(w, ZERO) + c1 * c2
                if v.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = v
        return FreeElement(self.cartan, out)

    def __rmul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self

    def __pow__(self, k):
        if not isinstance(k, int):
            raise AlgebraError("integer exponent required")
        if k < 0:
            if len(self.terms) == 1:
                (w, c), = self.terms.items()
                if all(kind == K for kind, _, _ in w):
                    inv = tuple((K, i, -p) for kind, i, p in reversed(w))
                    return FreeElement(self.cartan, {inv: c.inverse()}) ** (-k)
            raise AlgebraError("negative powers exist only for K-monomials")
        out = FreeElement.scalar(self.cartan)
        for _ in range(k):
            out = out * self
        return out

    def normalize(self) -> Element:
        out = Element._wrap(self.cartan, {})
        for w, c in self.terms.items():
            out = out + _normalize_word(self.cartan, w, c)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            neg, coef = _expr.coefficient_parts(c)
            mono = "*".join(f"{_NAME[kind]}{i + 1}" + (f"^{p}" if p != 1 else "") for kind, i, p in w)
            body = mono if not coef else (coef if not mono else f"{coef}*{mono}")
            parts.append((neg, body or "1"))
        return _expr.join_terms(parts)

    def __repr__(self):
        return f"FreeElement({self})"


# ---------------------------------------------------------------------------
# parsing into the algebra

def eval_free(node, cartan_data: CartanData) -> FreeElement:
    tag = node[0]
    if tag == "gen":
        kind = _KIND[node[1]]
        cartan_data.check_index(node[2])
        return FreeElement(cartan_data, {((kind, node[2] - 1, 1),): 1})
    if not _expr.has_generators(node):
        return FreeElement.scalar(cartan_data, _expr.eval_exact(node))
    if tag == "neg":
        return -eval_free(node[1], cartan_data)
    if tag == "pow":
        base = eval_free(node[1], cartan_data)
        return base ** _expr._exact_exponent(node[2])
    if tag == "div":
        if _expr.has_generators(node[2]):
            raise AlgebraError("division by an algebra element")
        return eval_free(node[1], cartan_data) * _expr.eval_exact(node[2]).inverse()
    a, b = eval_free(node[1], cartan_data), eval_free(node[2], cartan_data)
    if tag == "add":
        return a + b
    if tag == "sub":
        return a - b
    return a * b


def parse_free(text: str, cartan_data: CartanData) -> FreeElement:
    return eval_free(_expr.parse(text), cartan_data)


def parse_element(text: str, cartan_data: CartanData) -> Element:
    return parse_free(text, cartan_data).normalize()


# ---------------------------------------------------------------------------
# public operations

def normalize(word, cartan_data: CartanData = None, scalar=1) -> Element:
    """Triangular normal form.

    ``word`` may be an expression string, a FreeElement, an Element (returned
    as is), or a sequence of letters such as ``["F1", "E1"]``.
    """
    if isinstance(word, Element):
        return word
    if isinstance(word, FreeElement):
        return word.normalize() * qrat(scalar) if scalar != 1 else word.normalize()
    if cartan_data is None:
        raise AlgebraError("normalize needs Cartan data for raw words")
    if isinstance(word, str):
        return parse_element(word, cartan_data) * qrat(scalar)
    letters = tuple(parse_letter(x) if isinstance(x, str) else tuple(x) for x in word)
    return _normalize_word(cartan_data, letters, qrat(scalar))


@lru_cache(maxsize=200000)
def _mono_mul_cached(A, m1, m2):
    state = _k_mono_mul(m1, m2, A)
    return tuple((m, _coef(cm)) for m, cm in state.items())


def mul(x: Element, y: Element) -> Element:
    """Normal form of the product."""
    x._check(y)
    A = x.cartan.A
    acc = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            c12 = c1 * c2
            for m, c in _mono_mul_cached(A, m1, m2):
                groups = acc.get(m)
                if groups is None:
                    groups = acc[m] = {}
                v = c12 * c
                groups[v.den] = groups.get(v.den, _ZERO_LP) + v.num
    out = {}
    for m, groups in acc.items():
        total = ZERO
        for den, num in groups.items():
            if not num.is_zero():
                total = total + QRat(num, den)
        if not total.is_zero():
            out[m] = total
    return Element._wrap(x.cartan, out)


_ZERO_LP = LaurentPoly()


def commutator(x: Element, y: Element) -> Element:
    return mul(x, y) - mul(y, x)


def root_of(x: Element) -> RootVector:
    """Root of a homogeneous nonzero element."""
    if x.is_zero():
        raise AlgebraError("root of the zero element is undefined")
    roots = {TriMonomial(*m).root() for m in x.terms}
    if len(roots) > 1:
        raise InhomogeneousError(roots)
    return roots.pop()


def weight_components(x: Element) -> dict:
    out = {}
    for m, c in x.terms.items():
        r = TriMonomial(*m).root()
        out.setdefault(r, {})[m] = c
    return {r: Element._wrap(x.cartan, t) for r, t in out.items()}


def monomial_root(m) -> RootVector:
    return TriMonomial(*m).root()


# ---------------------------------------------------------------------------
# independent rewriter

def naive_normalize(cartan_data: CartanData, word, rng=None, order="random", max_steps=10**7):
    """Rewrite a word to normal form one redex at a time.

    Works on expanded single letters with K exponents +-1 and applies the
    defining relations as oriented rules, choosing the redex by ``order``
    ('random', 'leftmost' or 'rightmost'). Returns ``(Element, steps)``.
    Shares no code with the kernels, so it serves as an oracle for
    order independence and termination.
    """
    rng = rng or random.Random(0)
    A = cartan_data.A
    letters = []
    for w in word:
        kind, i, p = parse_letter(w) if isinstance(w, str) else tuple(w)
        if kind == K:
            letters.extend([(K, i, 1 if p > 0 else -1)] * abs(p))
        else:
            letters.extend([(kind, i, 1)] * p)
    inv_qm = (Q - Q ** -1).inverse()
    work = {tuple(letters): ONE}
    steps = 0

    def redexes(w):
        out = []
        for j in range(len(w) - 1):
            (k1, i1, p1), (k2, i2, p2) = w[j], w[j + 1]
            if k1 == K and k2 == E:
                out.append(j)
            elif k1 == F and k2 == K:
                out.append(j)
            elif k1 == K and k2 == K and (i1 > i2 or (i1 == i2 and p1 != p2)):
                out.append(j)
            elif k1 == F and k2 == E:
                out.append(j)
            elif k1 == k2 and k1 != K and i1 > i2 and A[i1][i2] == 0:
                out.append(j)
        return out

    done = {}

    def add(w, c):
        v = work.get(w, ZERO) + c
        if v.is_zero():
            work.pop(w, None)
        else:
            work[w] = v

    while work:
        if order == "random":
            w = rng.choice(list(work))
        elif order == "leftmost":
            w = min(work)
        else:
            w = max(work)
        r = redexes(w)
        c = work.pop(w)
        if not r:
            v = done.get(w, ZERO) + c
            if v.is_zero():
                done.pop(w, None)
            else:
                done[w] = v
            continue
        j = rng.choice(r) if order == "random" else (r[0] if order == "leftmost" else r[-1])
        steps += 1
        if steps > max_steps:
            raise AlgebraError("rewriting did not terminate within the step bound")
        (k1, i1, p1), (k2, i2, p2) = w[j], w[j + 1]
        pre, post = w[:j], w[j + 2:]
        if k1 == K and k2 == E:
            add(pre + (w[j + 1], w[j]) + post, c * Q ** (p1 * A[i1][i2]))
        elif k1 == F and k2 == K:
            add(pre + (w[j + 1], w[j]) + post, c * Q ** (p2 * A[i2][i1]))
        elif k1 == K and k2 == K:
            if i1 == i2:
                add(pre + post, c)
            else:
                add(pre + (w[j + 1], w[j]) + post, c)
        elif k1 == F and k2 == E:
            add(pre + (w[j + 1], w[j]) + post, c)
            if i1 == i2:
                add(pre + ((K, i1, 1),) + post, -c * inv_qm)
                add(pre + ((K, i1, -1),) + post, c * inv_qm)
        else:
            add(pre + (w[j + 1], w[j]) + post, c)

    n = cartan_data.rank
    terms = {}
    for w, c in done.items():
        e = tuple(i for kind, i, _ in w if kind == E)
        f = tuple(i for kind, i, _ in w if kind == F)
        k = [0] * n
        for kind, i, p in w:
            if kind == K:
                k[i] += p
        m = (e, tuple(k), f)
        v = terms.get(m, ZERO) + c
        if v.is_zero():
            terms.pop(m, None)
        else:
            terms[m] = v
    return Element._wrap(cartan_data, terms), steps


# ---------------------------------------------------------------------------
# tiered equality

EQUAL, UNEQUAL, UNDECIDED = "equal", "unequal", "undecided"


def compare(x: Element, y: Element, reps=None) -> str:
    """Tiered equality: normal forms, then representation images.

    In rank 1 the normal form is a basis so the answer is never undecided.
    """
    x._check(y)
    if x == y:
        return EQUAL
    if x.cartan.rank == 1:
        return UNEQUAL
    from .reps import SymmetricPowerRep

    reps = reps or [SymmetricPowerRep(x.cartan.rank, m) for m in (1, 2, 3)]
    d = x - y
    for rep in reps:
        if not rep.is_zero_image(d):
            return UNEQUAL
    return UNDECIDED
