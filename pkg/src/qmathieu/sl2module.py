"""Rank one Mathieu modules M(C_{lambda,mu}) for U_q(sl(2)).

The weight basis is indexed by k in Z: k > 0 is E^k.1, k = 0 is 1 and k < 0
is F^{-k}.1. The weight of index k is lambda q^{2k}.
"""

from __future__ import annotations

import cmath
import math

from .algebra import AlgebraError, Element, cartan, gen
from .qfield import LaurentPoly, Q, QRat, qrat
from .scalars import EXACT, context_for, is_real

SL2 = cartan(1)


class ReducibleInputError(AlgebraError):
    pass


class Rank1Sl2Params:
    """(q, lambda, mu). ``q0=None`` means exact QRat scalars; otherwise numbers at q = q0."""

    __slots__ = ("q0", "lam", "mu", "ctx")

    def __init__(self, lam, mu, q0=None, tol=1e-9):
        self.ctx = context_for(q0, tol)
        self.q0 = self.ctx.q0
        self.lam = self.ctx.coerce(lam)
        self.mu = self.ctx.coerce(mu)
        if self.ctx.is_zero(self.lam, 0):
            raise AlgebraError("lambda must be nonzero")

    @classmethod
    def with_context(cls, lam, mu, ctx):
        """Parameters over an arbitrary scalar context (e.g. symbolic)."""
        p = object.__new__(cls)
        p.ctx, p.q0 = ctx, ctx.q0
        p.lam, p.mu = ctx.coerce(lam), ctx.coerce(mu)
        return p

    @property
    def exact(self):
        return self.ctx.exact

    @property
    def degenerate(self):
        return self.ctx.is_zero(self.mu, 0)

    def replace(self, lam=None, mu=None):
        p = object.__new__(Rank1Sl2Params)
        p.ctx, p.q0 = self.ctx, self.q0
        p.lam = self.lam if lam is None else lam
        p.mu = self.mu if mu is None else mu
        return p

    def __eq__(self, other):
        return (isinstance(other, Rank1Sl2Params) and self.q0 == other.q0
                and self.lam == other.lam and self.mu == other.mu)

    def close(self, other, tol=None):
        return (self.q0 == other.q0 and self.ctx.close(self.lam, other.lam, tol)
                and self.ctx.close(self.mu, other.mu, tol))

    def __hash__(self):
        return hash((self.q0, self.lam, self.mu))

    def __repr__(self):
        return f"Rank1Sl2Params(lam={self.lam}, mu={self.mu}, q0={self.q0})"


class Sl2Vector:
    """Finitely supported vector {k: coefficient} in the weight basis."""

    __slots__ = ("support",)

    def __init__(self, support=None, ctx=EXACT):
        self.support = {}
        for k, c in (support or {}).items():
            if not ctx.is_zero(c, 0):
                self.support[int(k)] = c

    @classmethod
    def _wrap(cls, support):
        v = object.__new__(cls)
        v.support = support
        return v

    def __add__(self, other):
        out = dict(self.support)
        for k, c in other.support.items():
            v = out.get(k, 0) + c
            if v == 0:
                out.pop(k, None)
            else:
                out[k] = v
        return Sl2Vector._wrap(out)

    def __neg__(self):
        return Sl2Vector._wrap({k: -c for k, c in self.support.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if c == 0:
            return Sl2Vector._wrap({})
        return Sl2Vector._wrap({k: v * c for k, v in self.support.items() if v * c != 0})

    def __rmul__(self, c):
        return self.scale(c)

    def coefficient(self, k):
        return self.support.get(k, 0)

    def is_zero(self):
        return not self.support

    def __eq__(self, other):
        if isinstance(other, Sl2Vector):
            return self.support == other.support
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.support.items()))

    def close(self, other, tol=1e-10):
        keys = set(self.support) | set(other.support)
        return all(abs(self.support.get(k, 0) - other.support.get(k, 0))
                   <= tol * max(1.0, abs(self.support.get(k, 0)), abs(other.support.get(k, 0))) for k in keys)

    def __str__(self):
        if not self.support:
            return "0"
        return " + ".join(f"({c})*v[{k}]" for k, c in sorted(self.support.items()))

    def __repr__(self):
        return f"Sl2Vector({self.support})"


def basis(k: int, p: Rank1Sl2Params = None) -> Sl2Vector:
    one = p.ctx.coerce(1) if p is not None else qrat(1)
    return Sl2Vector._wrap({int(k): one})


def _qm2(ctx):
    return (ctx.qpow(1) - ctx.qpow(-1)) ** 2


def coef_E_on_F(p: Rank1Sl2Params, n: int):
    """E.(F^n.1) = coef * F^{n-1}.1 for n >= 1."""
    c, lam = p.ctx, p.lam
    return p.mu + (c.qpow(n - 1) - c.qpow(1 - n)) * (c.qpow(-n) * lam - c.qpow(n) / lam) / _qm2(c)


def coef_F_on_E(p: Rank1Sl2Params, n: int):
    """F.(E^n.1) = coef * E^{n-1}.1 for n >= 1."""
    c, lam = p.ctx, p.lam
    return p.mu - (c.qpow(n) - c.qpow(-n)) * (c.qpow(n - 1) * lam - c.qpow(1 - n) / lam) / _qm2(c)


def weight(p: Rank1Sl2Params, k: int):
    return p.lam * p.ctx.qpow(2 * k)


def _act(v: Sl2Vector, fn):
    out = {}
    for k, c in v.support.items():
        r = fn(k)
        if r is None:
            continue
        k2, a = r
        val = out.get(k2, 0) + a * c
        if val == 0:
            out.pop(k2, None)
        else:
            out[k2] = val
    return Sl2Vector._wrap(out)


def act_K(p, v, power=1):
    return _act(v, lambda k: (k, weight(p, k) ** power))


def act_E(p, v):
    return _act(v, lambda k: (k + 1, p.ctx.coerce(1)) if k >= 0 else (k + 1, coef_E_on_F(p, -k)))


def act_F(p, v):
    return _act(v, lambda k: (k - 1, p.ctx.coerce(1)) if k <= 0 else (k - 1, coef_F_on_E(p, k)))


def act_element(p: Rank1Sl2Params, x: Element, v: Sl2Vector) -> Sl2Vector:
    """Action of a normal-form element of U_q(sl(2))."""
    if x.cartan != SL2:
        raise AlgebraError("act_element needs an element of U_q(sl(2))")
    total = Sl2Vector._wrap({})
    for (e, k, f), c in x.terms.items():
        w = v
        for _ in f:
            w = act_F(p, w)
        if k[0]:
            w = act_K(p, w, k[0])
        for _ in e:
            w = act_E(p, w)
        total = total + w.scale(p.ctx.embed(c))
    return total


def casimir_element() -> Element:
    """Omega = EF + (q^-1 K + q K^-1)/(q - q^-1)^2."""
    E, F = gen(SL2, "E", 1), gen(SL2, "F", 1)
    K, Ki = gen(SL2, "K", 1), gen(SL2, "K", 1, -1)
    return E * F + (K * Q ** -1 + Ki * Q) / (Q - Q ** -1) ** 2


def casimir_scalar(p: Rank1Sl2Params):
    c = p.ctx
    return p.mu + (c.qpow(-1) * p.lam + c.qpow(1) / p.lam) / _qm2(c)


# ---------------------------------------------------------------------------
# reducibility

def quadratic_E(p):
    """(s, prod) with the E-equation equivalent to x^2 - s x + prod = 0 at x = q^{2n}."""
    c = p.ctx
    M = _qm2(c) * p.mu
    return p.lam ** 2 + c.qpow(2) + c.qpow(1) * p.lam * M, c.qpow(2) * p.lam ** 2


def quadratic_F(p):
    c = p.ctx
    M = _qm2(c) * p.mu
    return 1 + c.qpow(2) / p.lam ** 2 + c.qpow(1) * M / p.lam, c.qpow(2) / p.lam ** 2


def _candidates_exact(s: QRat, prod: QRat):
    """Integers n >= 1 that can solve q^{4n} - s q^{2n} + prod = 0, by comparing degrees."""
    den = LaurentPoly(1)
    for r in (s, prod):
        den = den * r.den
    D = den
    S = (s * qrat(den)).as_laurent()
    P = (prod * qrat(den)).as_laurent()
    out = set()
    ends = []
    for pick in ("high", "low"):
        d = getattr(D, pick)
        terms = [(4, d)]
        if not S.is_zero():
            terms.append((2, getattr(S, pick)))
        if not P.is_zero():
            terms.append((0, getattr(P, pick)))
        ends.append(terms)
    for terms in ends:
        for i in range(len(terms)):
            for j in range(i + 1, len(terms)):
                (a1, e1), (a2, e2) = terms[i], terms[j]
                # a1*n + e1 == a2*n + e2
                num, dd = e2 - e1, a1 - a2
                if dd and num % dd == 0 and num // dd >= 1:
                    out.add(num // dd)
    return sorted(out)


def _solutions_exact(p, which):
    s, prod = quadratic_E(p) if which == "E" else quadratic_F(p)
    coef = coef_E_on_F if which == "E" else coef_F_on_E
    out = []
    for n in _candidates_exact(s, prod):
        if qrat(coef(p, n)).is_zero():
            out.append(n)
    if which == "E" and p.degenerate and 1 not in out:
        out.insert(0, 1)
    return sorted(out)


def _quadratic_roots(s, prod):
    disc = cmath.sqrt(s * s - 4 * prod)
    # stable form: avoid cancellation in the smaller root
    if abs(s + disc) >= abs(s - disc):
        r1 = (s + disc) / 2
    else:
        r1 = (s - disc) / 2
    if r1 == 0:
        return [0j, 0j]
    return [r1, prod / r1]


def _solutions_numeric(p, which, tol=None):
    tol = p.ctx.tol if tol is None else tol
    s, prod = quadratic_E(p) if which == "E" else quadratic_F(p)
    coef = coef_E_on_F if which == "E" else coef_F_on_E
    lq = math.log(p.q0)
    out = set()
    for r in _quadratic_roots(complex(s), complex(prod)):
        if r == 0 or r.real <= 0 or abs(r.imag) > tol * abs(r):
            continue
        nr = math.log(r.real) / (2 * lq)
        n = round(nr)
        if n >= 1 and abs(nr - n) < tol:
            x = p.q0 ** (2 * n)
            resid = abs(x * x - s * x + prod)
            if resid <= 1e-8 * (x * x + abs(s) * x + abs(prod)):
                out.add(n)
    if which == "E" and abs(p.mu) <= tol:
        out.add(1)
    return sorted(out)


def solutions_nE(p: Rank1Sl2Params, tol=None):
    """Every n >= 1 with E.(F^n.1) = 0, including the forced n = 1 when mu = 0."""
    return _solutions_exact(p, "E") if p.exact else _solutions_numeric(p, "E", tol)


def solutions_nF(p: Rank1Sl2Params, tol=None):
    """Every n >= 1 with F.(E^n.1) = 0."""
    return _solutions_exact(p, "F") if p.exact else _solutions_numeric(p, "F", tol)


def solve_nE(p: Rank1Sl2Params, tol=None):
    """Smallest n >= 1 solving the E-equation, or None.

    When mu = 0 the n = 1 solution is automatic (E kills F.1) and is left out
    here; it stays in :func:`solutions_nE` and in the submodule inventory.
    """
    sols = solutions_nE(p, tol)
    if p.degenerate:
        lam_is_pm_q = _lambda_is_pm_qpow(p, 1)
        if not lam_is_pm_q:
            sols = [n for n in sols if n != 1]
    return sols[0] if sols else None


def _lambda_is_pm_qpow(p, n):
    w = p.ctx.qpow(n)
    return p.ctx.close(p.lam, w) or p.ctx.close(p.lam, -w)


def solve_nF(p: Rank1Sl2Params, tol=None):
    sols = solutions_nF(p, tol)
    return sols[0] if sols else None


def submodules(p: Rank1Sl2Params, tol=None) -> dict:
    """Inventory of invariant half-spaces and the unique maximal proper submodule.

    M^-(n) = span{v_k : k <= -n} is invariant iff E kills F^n.1, and
    M^+(n) = span{v_k : k >= n} iff F kills E^n.1.
    """
    nE = solutions_nE(p, tol)
    nF = solutions_nF(p, tol)
    pieces = [{"kind": "M-", "n": n, "indices": f"k <= {-n}"} for n in nE]
    pieces += [{"kind": "M+", "n": n, "indices": f"k >= {n}"} for n in nF]
    if nE and nF:
        kind = "both"
    elif nE:
        kind = "M-"
    elif nF:
        kind = "M+"
    else:
        kind = "none"
    lo = -nE[0] + 1 if nE else None
    hi = nF[0] - 1 if nF else None
    dim = (hi - lo + 1) if (nE and nF) else None
    return {
        "kind": kind,
        "nE_all": nE,
        "nF_all": nF,
        "pieces": pieces,
        "maximal": {"M-": nE[0] if nE else None, "M+": nF[0] if nF else None},
        "irreducible": kind == "none",
        "quotient_indices": [lo, hi],
        "quotient_dim": dim,
    }


def is_irreducible(p, tol=None) -> bool:
    return not solutions_nE(p, tol) and not solutions_nF(p, tol)


# ---------------------------------------------------------------------------
# equivalence, intertwiners, trace

def equivalent_params(p: Rank1Sl2Params, n: int) -> Rank1Sl2Params:
    """Parameters of the same module seen from the cyclic vector of weight lambda q^{2n}."""
    if n == 0:
        return p
    c, lam = p.ctx, p.lam
    mu2 = p.mu - (c.qpow(n) - c.qpow(-n)) * (lam * c.qpow(n - 1) - c.qpow(1 - n) / lam) / _qm2(c)
    return p.replace(lam=lam * c.qpow(2 * n), mu=mu2)


def are_equivalent(p1: Rank1Sl2Params, p2: Rank1Sl2Params, tol=None):
    """Witness n with p2 == equivalent_params(p1, n), or None. Both must be irreducible."""
    if p1.q0 != p2.q0:
        raise AlgebraError("parameters use different q")
    for p in (p1, p2):
        if not is_irreducible(p, tol):
            raise ReducibleInputError(f"equivalence is only tested for irreducible modules: {p}")
    ratio = p2.lam / p1.lam
    if p1.exact:
        mf = qrat(ratio).monomial_form()
        if mf is None or mf[0] != 1 or mf[1] % 2:
            return None
        n = mf[1] // 2
        return n if equivalent_params(p1, n) == p2 else None
    tol = p1.ctx.tol if tol is None else tol
    ratio = complex(ratio)
    if ratio.real <= 0 or abs(ratio.imag) > tol * abs(ratio):
        return None
    nr = math.log(ratio.real) / (2 * math.log(p1.q0))
    n = round(nr)
    if abs(nr - n) > tol:
        return None
    cand = equivalent_params(p1, n)
    return n if p1.ctx.close(cand.mu, p2.mu, max(tol, 1e-9)) else None


def intertwiner_apply(p: Rank1Sl2Params, n: int, v: Sl2Vector) -> Sl2Vector:
    """Psi: M(p) -> M(equivalent_params(p, n)) sending 1 to F^n.1' (n >= 0).

    For n < 0 the map sends 1 to E^{-n}.1'.
    """
    p2 = equivalent_params(p, n)
    out = Sl2Vector._wrap({})
    for k, c in v.support.items():
        out = out + _psi_basis(p2, n, k).scale(c)
    return out


def _psi_basis(p2, n, k):
    if n >= 0:
        if k < 0:
            return basis(k - n, p2)
        w = basis(-n, p2)
        for _ in range(k):
            w = act_E(p2, w)
        return w
    m = -n
    if k >= 0:
        return basis(k + m, p2)
    w = basis(m, p2)
    for _ in range(-k):
        w = act_F(p2, w)
    return w


def ef_eigenvalue(p: Rank1Sl2Params, k: int):
    """EF acts on v_k by this scalar."""
    c, lam = p.ctx, p.lam
    return p.mu - (c.qpow(k) - c.qpow(-k)) * (c.qpow(k - 1) * lam - c.qpow(1 - k) / lam) / _qm2(c)


def trace_map(p: Rank1Sl2Params, k: int, j: int, l: int):
    """Diagonal coefficient of (EF)^j K^l on the weight space lambda q^{2k}."""
    if j < 0:
        raise ValueError("j must be >= 0")
    return weight(p, k) ** l * ef_eigenvalue(p, k) ** j


# ---------------------------------------------------------------------------
# degenerate modules

def verma_quotient_report(p: Rank1Sl2Params, tol=None) -> dict:
    """Structure of the degenerate module (mu = 0) and of its lowest weight quotient."""
    if not p.degenerate:
        raise AlgebraError("verma_quotient_report needs mu = 0")
    boundary_E = act_E(p, basis(-1, p))
    boundary_F = act_F(p, basis(-1, p))
    w_invariant = boundary_E.is_zero() and all(k <= -1 for k in boundary_F.support)
    f_on_1 = act_F(p, basis(1, p))
    nF = solutions_nF(p, tol)
    inventory = submodules(p, tol)
    return {
        "params": _params_json(p),
        "submodule_W": {"generator": "F.1", "indices": "k <= -1", "invariant": w_invariant},
        "E_on_F1_is_zero": boundary_E.is_zero(),
        "F_on_E1_is_zero": f_on_1.is_zero(),
        "quotient": {
            "indices": "k >= 0",
            "lowest_weight": _scalar_json(p.lam),
            "F_kills_image_of_1": True,
            "finite_dimensional": bool(nF),
            "dim": nF[0] if nF else None,
        },
        "nE_all": inventory["nE_all"],
        "nF_all": nF,
        "solve_nE": solve_nE(p, tol),
    }


def _scalar_json(x):
    from .scalars import to_json_scalar

    return to_json_scalar(x)


def _params_json(p):
    return {"q": p.q0 if p.q0 is not None else "q", "lambda": _scalar_json(p.lam), "mu": _scalar_json(p.mu)}


def analyze(p: Rank1Sl2Params, tol=None) -> dict:
    """Report with keys params, casimir, nE, nF, submodules, irreducible, quotient_dims."""
    inv = submodules(p, tol)
    return {
        "params": _params_json(p),
        "casimir": _scalar_json(casimir_scalar(p)),
        "nE": solve_nE(p, tol),
        "nF": solve_nF(p, tol),
        "submodules": inv,
        "irreducible": inv["irreducible"],
        "quotient_dims": {"maximal_quotient": inv["quotient_dim"], "indices": inv["quotient_indices"]},
        "quotient_dim": inv["quotient_dim"],
    }
