"""Finite-dimensional representations used as oracles for the rewriting engine.

The q-symmetric power Sym^m of the vector representation has basis x^a for
compositions a of m into n+1 parts, with

    E_i x^a = [a_{i+1}] x^{a + e_i - e_{i+1}}
    F_i x^a = [a_i]     x^{a - e_i + e_{i+1}}
    K_i x^a = q^{a_i - a_{i+1}} x^a

m = 1 is the vector representation (E_i -> e_{i,i+1}, F_i -> e_{i+1,i}).
Every generator maps basis vectors to multiples of basis vectors, so word
images are monomial matrices and are cheap to compute exactly.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .algebra import E, F, K, CartanData, Element, FreeElement, cartan
from .qfield import ONE, ZERO, LaurentPoly, Q, QRat, qbinomial, qint, qrat


class SparseMatrix:
    """Square matrix with QRat entries stored as {(row, col): value}."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim, entries=None):
        self.dim = dim
        self.entries = {k: v for k, v in (entries or {}).items() if not v.is_zero()}

    @classmethod
    def identity(cls, dim):
        return cls(dim, {(i, i): ONE for i in range(dim)})

    def is_zero(self):
        return not self.entries

    def __add__(self, other):
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, ZERO) + v
        return SparseMatrix(self.dim, out)

    def __neg__(self):
        return SparseMatrix(self.dim, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = qrat(c)
        return SparseMatrix(self.dim, {k: v * c for k, v in self.entries.items()})

    def __matmul__(self, other):
        rows = {}
        for (i, j), v in other.entries.items():
            rows.setdefault(i, []).append((j, v))
        out = {}
        for (i, k), a in self.entries.items():
            for j, b in rows.get(k, ()):
                out[(i, j)] = out.get((i, j), ZERO) + a * b
        return SparseMatrix(self.dim, out)

    def __eq__(self, other):
        return isinstance(other, SparseMatrix) and self.dim == other.dim and self.entries == other.entries

    def __hash__(self):
        return hash((self.dim, frozenset(self.entries.items())))

    def to_rows(self):
        return [[self.entries.get((i, j), ZERO) for j in range(self.dim)] for i in range(self.dim)]

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.to_rows())

    def __repr__(self):
        return f"SparseMatrix(dim={self.dim}, nnz={len(self.entries)})"


class _Accumulator:
    """Sums QRat values grouped by denominator to avoid repeated gcds."""

    def __init__(self):
        self.groups = {}

    def add(self, key, value: QRat):
        g = self.groups.setdefault(key, {})
        g[value.den] = g.get(value.den, LaurentPoly()) + value.num

    def result(self):
        out = {}
        for key, g in self.groups.items():
            total = ZERO
            for den, num in g.items():
                if not num.is_zero():
                    total = total + QRat(num, den)
            if not total.is_zero():
                out[key] = total
        return out


def _q_laurent(e):
    return LaurentPoly.monomial(e)


class SymmetricPowerRep:
    """q-symmetric power Sym^m of C^{n+1} for U_q(sl(n+1))."""

    def __init__(self, rank: int, m: int = 1, check: bool = True):
        if m < 1:
            raise ValueError("symmetric power degree must be >= 1")
        self.cartan = cartan(rank)
        self.rank = rank
        self.degree = m
        self.basis = [a for a in product(range(m + 1), repeat=rank + 1) if sum(a) == m]
        self.index = {a: i for i, a in enumerate(self.basis)}
        self.dim = len(self.basis)
        self._qint = [qint(j).num for j in range(m + 1)]
        if check:
            bad = [name for name, mat in relation_residuals(self).items() if not mat.is_zero()]
            if bad:
                raise AssertionError(f"representation fails relations: {bad}")

    def __hash__(self):
        return hash((self.rank, self.degree))

    def __eq__(self, other):
        return isinstance(other, SymmetricPowerRep) and (self.rank, self.degree) == (other.rank, other.degree)

    # action of one letter on a basis vector: returns (coef LaurentPoly, new index) or None
    def _apply(self, kind, i, p, a):
        coef = LaurentPoly(1)
        if kind == K:
            return coef.shift(p * (a[i] - a[i + 1])), a
        for _ in range(p):
            if kind == E:
                if a[i + 1] == 0:
                    return None
                coef = coef * self._qint[a[i + 1]]
                a = a[:i] + (a[i] + 1, a[i + 1] - 1) + a[i + 2:]
            else:
                if a[i] == 0:
                    return None
                coef = coef * self._qint[a[i]]
                a = a[:i] + (a[i] - 1, a[i + 1] + 1) + a[i + 2:]
        return coef, a

    @lru_cache(maxsize=100000)
    def word_image(self, word):
        """Monomial matrix of a word of (kind, index0, power) letters, as {col: (row, coef)}."""
        out = {}
        for col, a in enumerate(self.basis):
            coef = LaurentPoly(1)
            ok = True
            for kind, i, p in reversed(word):
                r = self._apply(kind, i, p, a)
                if r is None:
                    ok = False
                    break
                c, a = r
                coef = coef * c
            if ok:
                out[col] = (self.index[a], coef)
        return out

    def generator(self, name, i, power=1):
        kind = {"E": E, "K": K, "F": F}[name]
        return self._word_matrix(((kind, i - 1, power),))

    def _word_matrix(self, word, scale=ONE):
        return SparseMatrix(self.dim, {(r, c): qrat(v) * scale for c, (r, v) in self.word_image(word).items()})

    def image(self, x) -> SparseMatrix:
        """Matrix of an Element or FreeElement."""
        if x.cartan != self.cartan:
            raise ValueError("element and representation have different rank")
        acc = _Accumulator()
        if isinstance(x, Element):
            items = ((mono_to_word(m), c) for m, c in x.terms.items())
        elif isinstance(x, FreeElement):
            items = x.terms.items()
        else:
            raise TypeError("expected an algebra element")
        for w, c in items:
            for col, (row, v) in self.word_image(w).items():
                acc.add((row, col), c * v)
        return SparseMatrix(self.dim, acc.result())

    def is_zero_image(self, x) -> bool:
        return self.image(x).is_zero()


def mono_to_word(m):
    e, k, f = m
    return (tuple((E, a, 1) for a in e) + tuple((K, i, p) for i, p in enumerate(k) if p)
            + tuple((F, a, 1) for a in f))


@lru_cache(maxsize=None)
def fundamental_rep(n: int) -> SymmetricPowerRep:
    """Vector representation of U_q(sl(n+1)) on C^{n+1}; relations checked on construction."""
    return SymmetricPowerRep(n, 1)


def rep_check(x, rep=None) -> SparseMatrix:
    """Image of an algebra element under ``rep`` (default: vector representation)."""
    rep = rep or fundamental_rep(x.cartan.rank)
    return rep.image(x)


def relation_residuals(rep: SymmetricPowerRep) -> dict:
    """Left minus right side of every defining relation, as matrices.

    Computed from generator matrices alone, independently of the rewriting
    engine. All values are zero for a genuine representation.
    """
    n = rep.rank
    A = rep.cartan.A
    Em = [rep.generator("E", i) for i in range(1, n + 1)]
    Fm = [rep.generator("F", i) for i in range(1, n + 1)]
    Km = [rep.generator("K", i) for i in range(1, n + 1)]
    Ki = [rep.generator("K", i, -1) for i in range(1, n + 1)]
    I = SparseMatrix.identity(rep.dim)
    qm_inv = (Q - Q ** -1).inverse()
    out = {}
    for i in range(n):
        out[f"K{i + 1}*K{i + 1}^-1 = 1"] = Km[i] @ Ki[i] - I
        out[f"K{i + 1}^-1*K{i + 1} = 1"] = Ki[i] @ Km[i] - I
        for j in range(n):
            t = f"{i + 1},{j + 1}"
            out[f"K{t} commute"] = Km[i] @ Km[j] - Km[j] @ Km[i]
            out[f"K E K^-1 [{t}]"] = Km[i] @ Em[j] @ Ki[i] - Em[j].scale(Q ** A[i][j])
            out[f"K F K^-1 [{t}]"] = Km[i] @ Fm[j] @ Ki[i] - Fm[j].scale(Q ** -A[i][j])
            comm = Em[i] @ Fm[j] - Fm[j] @ Em[i]
            if i == j:
                comm = comm - (Km[i] - Ki[i]).scale(qm_inv)
            out[f"[E,F] [{t}]"] = comm
            if i != j:
                out[f"Serre E [{t}]"] = _serre(Em[i], Em[j], A[i][j], rep.dim)
                out[f"Serre F [{t}]"] = _serre(Fm[i], Fm[j], A[i][j], rep.dim)
    return out


def _mpow(M, k, dim):
    out = SparseMatrix.identity(dim)
    for _ in range(k):
        out = out @ M
    return out


def _serre(X, Y, a, dim):
    s = 1 - a
    total = SparseMatrix(dim)
    for r in range(s + 1):
        term = _mpow(X, s - r, dim) @ Y @ _mpow(X, r, dim)
        c = qbinomial(s, r) * (-1) ** r
        total = total + term.scale(c)
    return total


def serre_element(cartan_data: CartanData, i: int, j: int, kind: str = "E") -> FreeElement:
    """The q-Serre combination for letters X_i, X_j (1-based) as a free element."""
    a = cartan_data.a(i, j)
    s = 1 - a
    k = {"E": E, "F": F}[kind]
    x, y = (k, i - 1, 1), (k, j - 1, 1)
    total = FreeElement(cartan_data)
    for r in range(s + 1):
        w = (x,) * (s - r) + (y,) + (x,) * r
        total = total + FreeElement(cartan_data, {w: qbinomial(s, r) * (-1) ** r})
    return total
