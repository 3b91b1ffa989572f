"""The zero-root subalgebra U_0, height functions, the split U_0 = U_0^S + I^S,
and the one-dimensional representations phi^S_{lambda,mu} of U_0.
"""

from __future__ import annotations

import random

from .algebra import E, F, K, AlgebraError, CartanData, Element, RootVector, TriMonomial
from .scalars import EXACT, context_for


class NotInU0Error(AlgebraError):
    pass


class SubsetS:
    """Pairwise strongly orthogonal set of simple indices (1-based)."""

    __slots__ = ("cartan", "indices")

    def __init__(self, cartan_data: CartanData, indices):
        idx = tuple(sorted(set(int(i) for i in indices)))
        for i in idx:
            cartan_data.check_index(i)
        for a in idx:
            for b in idx:
                if a < b and cartan_data.a(a, b) != 0:
                    raise AlgebraError(f"S is not strongly orthogonal: a_{a}{b} = {cartan_data.a(a, b)}")
        self.cartan = cartan_data
        self.indices = idx

    def __contains__(self, i):
        return i in self.indices

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def contains_root(self, r: RootVector) -> bool:
        """Membership of r in Q^+_S."""
        return all(b >= 0 and (b == 0 or i in self.indices) for i, b in enumerate(r, 1))

    def __repr__(self):
        return f"SubsetS({list(self.indices)})"


def e_root(m) -> RootVector:
    return TriMonomial(*m).e_root()


def f_root(m) -> RootVector:
    return TriMonomial(*m).f_root()


def _heights(x: Element, i: int):
    if x.is_zero():
        raise AlgebraError("height functions are undefined on zero")
    x.cartan.check_index(i)
    return [sum(1 for a in m[0] if a == i - 1) for m in x.terms]


def h_minus(x: Element, i: int) -> int:
    """Minimal i-height of the E-roots in the normal form of x."""
    return min(_heights(x, i))


def h_plus(x: Element, i: int) -> int:
    return max(_heights(x, i))


def in_U0(x: Element) -> bool:
    return all(sorted(m[0]) == sorted(m[2]) for m in x.terms)


def project_U0(x: Element) -> Element:
    return Element._wrap(x.cartan, {m: c for m, c in x.terms.items() if sorted(m[0]) == sorted(m[2])})


def split_U0S(x: Element, S: SubsetS):
    """(U_0^S part, I^S part) by the per-monomial E-root test."""
    if not in_U0(x):
        raise NotInU0Error("split_U0S needs an element of U_0")
    keep, ideal = {}, {}
    for m, c in x.terms.items():
        (keep if S.contains_root(e_root(m)) else ideal)[m] = c
    return Element._wrap(x.cartan, keep), Element._wrap(x.cartan, ideal)


class OneDimRep:
    """phi^S_{lambda,mu}: K_i -> lambda_i, E_jF_j -> mu_j (j in S), I^S -> 0.

    ``lam`` has one entry per simple index; ``mu`` is a mapping j -> mu_j or a
    sequence aligned with sorted S. With ``q0`` set, all scalars are numbers
    and the algebra's exact coefficients are evaluated at q0.
    """

    def __init__(self, S: SubsetS, lam, mu=None, q0=None, tol=1e-9):
        self.S = S
        self.cartan = S.cartan
        self.ctx = context_for(q0, tol)
        n = self.cartan.rank
        lam = [self.ctx.coerce(v) for v in lam]
        if len(lam) != n:
            raise AlgebraError(f"need {n} lambda values, got {len(lam)}")
        if mu is None:
            mu = {}
        elif not isinstance(mu, dict):
            mu = dict(zip(S.indices, mu))
        mu = {int(j): self.ctx.coerce(v) for j, v in mu.items()}
        if set(mu) != set(S.indices):
            raise AlgebraError(f"mu must be given exactly for S = {list(S.indices)}")
        for v in lam:
            if self.ctx.is_zero(v, 0):
                raise AlgebraError("lambda entries must be nonzero")
        for v in mu.values():
            if self.ctx.is_zero(v, 0):
                raise AlgebraError("mu entries must be nonzero (a zero mu means a smaller S)")
        self.lam = lam
        self.mu = mu

    @property
    def degenerate(self):
        return not self.S.indices


def phi_block(lam, mu, k: int, ctx=EXACT):
    """phi(E^k F^k) in the rank one module with K -> lam, EF -> mu."""
    out = ctx.coerce(1)
    qm2 = (ctx.qpow(1) - ctx.qpow(-1)) ** 2
    for m in range(1, k + 1):
        out = out * (mu + (ctx.qpow(m - 1) - ctx.qpow(1 - m)) * (ctx.qpow(-m) * lam - ctx.qpow(m) / lam) / qm2)
    return out


def phi_monomial(rep: OneDimRep, m):
    """phi on one normal-form monomial (zero off U_0^S)."""
    e, l, f = m
    if sorted(e) != sorted(f):
        return rep.ctx.coerce(0)
    er = e_root(m)
    if not rep.S.contains_root(er):
        return rep.ctx.coerce(0)
    A = rep.cartan.A
    ctx = rep.ctx
    # move K^l right past the F-word, then the product splits into E_j^k F_j^k blocks
    shift = 0
    for j in f:
        shift -= sum(l[i] * A[i][j] for i in range(len(l)) if l[i])
    val = ctx.qpow(shift)
    for j, k in enumerate(er, 1):
        if k:
            val = val * phi_block(rep.lam[j - 1], rep.mu[j], k, ctx)
    for i, li in enumerate(l):
        if li:
            val = val * rep.lam[i] ** li
    return val


def phi_eval(rep: OneDimRep, x: Element):
    """phi^S_{lambda,mu} extended to U by projecting onto U_0."""
    if x.cartan != rep.cartan:
        raise AlgebraError("element and representation have different rank")
    ctx = rep.ctx
    total = ctx.coerce(0)
    for m, c in x.terms.items():
        v = phi_monomial(rep, m)
        if not ctx.is_zero(v, 0):
            total = total + ctx.embed(c) * v
    return total


# ---------------------------------------------------------------------------
# samplers

def random_root_zero_word(cartan_data: CartanData, rng: random.Random, max_pairs=3, max_k=2, indices=None):
    """Random word whose E and F letters have the same multiset (so root 0)."""
    n = cartan_data.rank
    pool = list(indices) if indices is not None else list(range(1, n + 1))
    t = rng.randint(0, max_pairs)
    idx = [rng.choice(pool) - 1 for _ in range(t)]
    letters = [(E, i, 1) for i in idx] + [(F, i, 1) for i in idx]
    for _ in range(rng.randint(0, max_k)):
        letters.append((K, rng.randrange(n), rng.choice((1, -1))))
    rng.shuffle(letters)
    return tuple(letters)


def random_word(cartan_data: CartanData, rng: random.Random, length: int):
    n = cartan_data.rank
    out = []
    for _ in range(length):
        kind = rng.choice((E, K, F))
        out.append((kind, rng.randrange(n), rng.choice((1, -1)) if kind == K else 1))
    return tuple(out)
