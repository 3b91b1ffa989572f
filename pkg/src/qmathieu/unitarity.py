"""Star structures, norms of the weight basis, positivity and series classification
for U_q(su(1,1)) Mathieu modules.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import E, F, K, AlgebraError, CartanData, Element, cartan, mul
from .centralizer import OneDimRep, phi_eval, random_word
from .qfield import QRat
from .scalars import NumericContext, is_real
from . import sl2module as _m
from .sl2module import Rank1Sl2Params, ReducibleInputError, SL2

# ---------------------------------------------------------------------------
# star structures


class StarStructure:
    """K_i* = K_{eta(i)}, E_i* = s_i F_{eta(i)} K_{eta(i)}, F_i* = s_i K_{eta(i)}^-1 E_{eta(i)}."""

    def __init__(self, cartan_data: CartanData, eta=None, signs=None):
        n = cartan_data.rank
        eta = list(eta) if eta is not None else list(range(1, n + 1))
        signs = list(signs) if signs is not None else [1] * n
        if sorted(eta) != list(range(1, n + 1)) or len(signs) != n:
            raise AlgebraError("eta must be a permutation of 1..n with one sign per index")
        for i in range(1, n + 1):
            j = eta[i - 1]
            if eta[j - 1] != i:
                raise AlgebraError("eta must be an involution")
            for k in range(1, n + 1):
                if cartan_data.a(j, eta[k - 1]) != cartan_data.a(i, k):
                    raise AlgebraError("eta must preserve the Cartan matrix")
            if signs[i - 1] not in (1, -1):
                raise AlgebraError("signs must be +1 or -1")
            if j != i and signs[i - 1] != 1:
                raise AlgebraError("s_i must be 1 when eta(i) != i")
        self.cartan = cartan_data
        self.eta = tuple(eta)
        self.signs = tuple(signs)

    def fixed_points(self):
        return {i for i in range(1, self.cartan.rank + 1) if self.eta[i - 1] == i}

    def __hash__(self):
        return hash((self.cartan, self.eta, self.signs))

    def __eq__(self, other):
        return isinstance(other, StarStructure) and (self.cartan, self.eta, self.signs) == (other.cartan, other.eta, other.signs)

    def __repr__(self):
        return f"StarStructure(eta={list(self.eta)}, signs={list(self.signs)})"


def su11() -> StarStructure:
    """The su(1,1) real form: K* = K, E* = -FK, F* = -K^-1 E."""
    return StarStructure(SL2, [1], [-1])


@lru_cache(maxsize=None)
def _letter_star(s: StarStructure, kind, i, p):
    from .algebra import _normalize_word

    C = s.cartan
    j = s.eta[i] - 1
    sg = s.signs[i]
    if kind == K:
        return _normalize_word(C, ((K, j, p),))
    if kind == E:
        base = _normalize_word(C, ((F, j, 1), (K, j, 1)), sg)
    else:
        base = _normalize_word(C, ((K, j, -1), (E, j, 1)), sg)
    out = base
    for _ in range(p - 1):
        out = mul(out, base)
    return out


def star(s: StarStructure, x: Element) -> Element:
    """Antilinear anti-automorphism; exact coefficients are real so only the order flips."""
    if x.cartan != s.cartan:
        raise AlgebraError("star structure and element have different rank")
    from .reps import mono_to_word

    total = Element._wrap(x.cartan, {})
    one = Element.scalar(x.cartan)
    for m, c in x.terms.items():
        acc = one
        for kind, i, p in reversed(mono_to_word(m)):
            acc = mul(acc, _letter_star(s, kind, i, p))
        total = total + acc.scale(c.conjugate())
    return total


# ---------------------------------------------------------------------------
# necessary conditions and norms


def _real_value(x, tol=1e-12):
    if isinstance(x, complex):
        return x.real if is_real(x, tol) else None
    return float(x)


def necessary_conditions(p: Rank1Sl2Params) -> dict:
    """lambda real nonzero and mu*lambda < 0; type I additionally needs lambda > 0."""
    if p.exact:
        raise AlgebraError("positivity questions need a numeric q")
    reasons = []
    lam = _real_value(p.lam)
    mu = _real_value(p.mu)
    if lam is None:
        reasons.append("lambda is not real")
    if mu is None:
        reasons.append("mu is not real")
    ok = not reasons and lam != 0 and mu * lam < 0
    if not reasons and not mu * lam < 0:
        reasons.append("mu*lambda >= 0")
    type_I = ok and lam > 0 and mu < 0
    return {"ok": bool(ok), "type_I": bool(type_I), "reasons": reasons}


def _M(p):
    return _m._qm2(p.ctx) * p.mu


def factor_E(p, x):
    """1 - (lambda^2 + q^2 + q M lambda) x + q^2 lambda^2 x^2."""
    c, lam = p.ctx, p.lam
    return 1 - (lam ** 2 + c.qpow(2) + c.qpow(1) * _M(p) * lam) * x + c.qpow(2) * lam ** 2 * x ** 2


def factor_F(p, x):
    """1 - (q^2 lambda^-2 + 1 + q M / lambda) x + q^2 lambda^-2 x^2."""
    c, lam = p.ctx, p.lam
    return 1 - (c.qpow(2) / lam ** 2 + 1 + c.qpow(1) * _M(p) / lam) * x + c.qpow(2) / lam ** 2 * x ** 2


def norm_sq_E(p: Rank1Sl2Params, n: int):
    """<E^n.1 | E^n.1> as a product over k = 0..n-1."""
    c = p.ctx
    pre = c.qpow(1) / _m._qm2(c)
    out = c.coerce(1)
    for k in range(n):
        out = out * pre * factor_E(p, c.qpow(2 * k))
    return out


def norm_sq_F(p: Rank1Sl2Params, n: int):
    c = p.ctx
    pre = c.qpow(-1) / _m._qm2(c)
    out = c.coerce(1)
    for k in range(n):
        out = out * pre * factor_F(p, c.qpow(2 * k))
    return out


def norm_sq_E_recursive(p: Rank1Sl2Params, n: int):
    """Same norms from E* = -FK: <E^n|E^n> = -q^{2n} lambda (F-coefficient) <E^{n-1}|E^{n-1}>."""
    c = p.ctx
    out = c.coerce(1)
    for m in range(1, n + 1):
        out = out * (-(c.qpow(2 * m)) * p.lam * _m.coef_F_on_E(p, m))
    return out


def norm_sq_F_recursive(p: Rank1Sl2Params, n: int):
    """From F* = -K^-1 E."""
    c = p.ctx
    out = c.coerce(1)
    for m in range(1, n + 1):
        out = out * (-(c.qpow(2 * (m - 1))) / p.lam * _m.coef_E_on_F(p, m))
    return out


def basis_norm(p, k):
    return norm_sq_E(p, k) if k >= 0 else norm_sq_F(p, -k)


def inner(p, v, w):
    """<v|w>, antilinear in v, with the weight basis orthogonal."""
    total = 0
    for k, a in v.support.items():
        b = w.support.get(k)
        if b is not None:
            total += complex(a).conjugate() * b * basis_norm(p, k)
    return total


# ---------------------------------------------------------------------------
# positivity decisions


def _first_bad_k(s, prod, q0):
    """Smallest k >= 0 with f(q^{2k}) <= 0 for f(x) = 1 - s x + prod x^2 (prod > 0), else None.

    The closed interval between the real roots is where f <= 0; q^{2k}
    decreases to 0 and f(0) = 1, so only finitely many k need checking.
    """
    s = float(s)
    prod = float(prod)
    disc = s * s - 4 * prod
    if disc < 0:
        return None
    if s <= 0:
        return None  # both roots negative
    r2 = (s + math.sqrt(disc)) / (2 * prod)
    # smallest k with q^{2k} <= r2
    lq = 2 * math.log(q0)
    k = max(0, math.ceil(math.log(r2) / lq - 1e-12))
    best = None
    for kk in (k - 1, k, k + 1):
        if kk < 0:
            continue
        x = q0 ** (2 * kk)
        if 1 - s * x + prod * x * x <= 0 and (best is None or kk < best):
            best = kk
    return best


def _branch_verdict(p, which):
    c, lam = p.ctx, float(_real_value(p.lam))
    q = p.q0
    M = float(_real_value(_M(p)))
    if which == "E":
        s, prod = lam ** 2 + q ** 2 + q * M * lam, q ** 2 * lam ** 2
    else:
        s, prod = q ** 2 / lam ** 2 + 1 + q * M / lam, q ** 2 / lam ** 2
    k = _first_bad_k(s, prod, q)
    if k is None:
        return {"positive": True, "first_failing_n": None}
    return {"positive": False, "first_failing_n": k + 1}


def is_unitarizable(p: Rank1Sl2Params, check_irreducible=True) -> dict:
    """Decide positivity of all norms <E^n|E^n>, <F^n|F^n> exactly on the discrete set."""
    nec = necessary_conditions(p)
    if not nec["ok"]:
        return {"unitarizable": False, "stage": "necessary", "necessary": nec,
                "positivity": {"E": None, "F": None}}
    if check_irreducible and not _m.is_irreducible(p):
        raise ReducibleInputError("unitarity is decided for irreducible modules only")
    ver = {"E": _branch_verdict(p, "E"), "F": _branch_verdict(p, "F")}
    ok = ver["E"]["positive"] and ver["F"]["positive"]
    return {"unitarizable": ok, "stage": "positivity", "necessary": nec, "positivity": ver}


def brute_force_positive(p: Rank1Sl2Params, kmax=500) -> dict:
    """Direct evaluation of both factors at q^{2k}, k <= kmax."""
    out = {}
    for which, fac in (("E", factor_E), ("F", factor_F)):
        first = None
        for k in range(kmax + 1):
            v = fac(p, p.q0 ** (2 * k))
            if _real_value(v) is None or _real_value(v) <= 0:
                first = k + 1
                break
        out[which] = first
    return out


def ab_form(p: Rank1Sl2Params):
    """(A, B, C, D) with the norms equal to (A,B;q^2)_n and (C,D;q^2)_n up to prefactors."""
    c, lam = p.ctx, p.lam
    M = _M(p)
    sAB, pAB = c.qpow(1) * lam * M + c.qpow(2) + lam ** 2, c.qpow(2) * lam ** 2
    sCD, pCD = c.qpow(1) * M / lam + 1 + c.qpow(2) / lam ** 2, c.qpow(2) / lam ** 2
    A, B = _m._quadratic_roots(complex(sAB), complex(pAB))
    C, D = _m._quadratic_roots(complex(sCD), complex(pCD))
    return A, B, C, D


# ---------------------------------------------------------------------------
# series


SERIES = ("principal", "strange", "complementary", "positive_discrete", "negative_discrete")


@dataclass(frozen=True)
class SeriesLabel:
    kind: str
    params: dict = field(default_factory=dict)
    epsilon: float = 0.0

    def __post_init__(self):
        if self.kind not in SERIES:
            raise ValueError(f"unknown series {self.kind!r}")
        if self.epsilon not in (0, 0.5):
            raise ValueError("epsilon must be 0 or 1/2")

    def key(self, digits=8):
        return (self.kind, tuple(sorted((k, round(v, digits)) for k, v in self.params.items())), self.epsilon)

    def to_json(self):
        return {"kind": self.kind, **self.params, "epsilon": self.epsilon}


class UnclassifiableError(AlgebraError):
    pass


def casimir_value(kind, q0, **kw):
    """Casimir scalar of a series label; the strange value is real although sigma is complex."""
    qm2 = (q0 - 1 / q0) ** 2
    if kind == "principal":
        return 2 * math.cos(2 * kw["b"] * math.log(q0)) / qm2
    if kind == "strange":
        return -(q0 ** (2 * kw["a"]) + q0 ** (-2 * kw["a"])) / qm2
    if kind == "complementary":
        s = 2 * kw["sigma"] + 1
        return (q0 ** s + q0 ** -s) / qm2
    k = kw["k"]
    return (q0 ** (1 - 2 * k) + q0 ** (2 * k - 1)) / qm2


def _epsilon(lam, q0, tol):
    tau = math.log(lam) / math.log(q0)
    r = tau % 2.0
    for eps, target in ((0.0, 0.0), (0.5, 1.0), (0.0, 2.0)):
        if abs(r - target) < tol:
            return eps
    return None


def params_for_series(label: SeriesLabel, q0: float) -> Rank1Sl2Params:
    """(lambda, mu) realizing a series label; discrete labels give the degenerate module
    (positive) or its M^+(1) analogue (negative) whose irreducible quotient is meant."""
    qm2 = (q0 - 1 / q0) ** 2
    if label.kind == "positive_discrete":
        lam = q0 ** (2 * label.params["k"])
        return Rank1Sl2Params(lam, 0.0, q0=q0)
    if label.kind == "negative_discrete":
        lam = q0 ** (-2 * label.params["k"])
        return Rank1Sl2Params(lam, (lam - 1 / lam) / (q0 - 1 / q0), q0=q0)
    lam = q0 ** (2 * label.epsilon)
    omega = casimir_value(label.kind, q0, **label.params)
    mu = omega - (lam / q0 + q0 / lam) / qm2
    return Rank1Sl2Params(lam, mu, q0=q0)


def classify_series(p: Rank1Sl2Params, tol=1e-9, check=True) -> SeriesLabel:
    """Series of a unitarizable type I module, read off from Casimir value and K-spectrum."""
    if p.exact:
        raise AlgebraError("classification needs a numeric q")
    q0 = p.q0
    lq = abs(math.log(q0))
    lam = _real_value(p.lam)
    mu = _real_value(p.mu)
    if lam is None or mu is None or lam <= 0:
        raise UnclassifiableError("not type I: lambda must be real and positive")
    qm2 = (q0 - 1 / q0) ** 2
    # discrete series through their reducible Mathieu modules
    mu_neg = (lam - 1 / lam) / (q0 - 1 / q0)
    two_k = math.log(lam) / math.log(q0)
    if abs(mu) <= tol and two_k > 0.5 and abs(two_k - round(two_k)) < tol:
        return SeriesLabel("positive_discrete", {"k": round(two_k) / 2}, 0.0 if round(two_k) % 2 == 0 else 0.5)
    if abs(mu - mu_neg) <= tol * max(1.0, abs(mu)) and two_k < -0.5 and abs(two_k - round(two_k)) < tol:
        kk = -round(two_k)
        return SeriesLabel("negative_discrete", {"k": kk / 2}, 0.0 if kk % 2 == 0 else 0.5)
    if check:
        verdict = is_unitarizable(p)
        if not verdict["unitarizable"] or not verdict["necessary"]["type_I"]:
            raise UnclassifiableError("module is not unitarizable of type I")
    eps = _epsilon(lam, q0, 1e-7)
    if eps is None:
        raise UnclassifiableError("K-spectrum is not in q^{2 epsilon + 2Z} with epsilon in {0, 1/2}")
    ct = qm2 * float(_real_value(_m.casimir_scalar(p)))
    if -2 - tol <= ct <= 2 + tol:
        b = math.acos(max(-1.0, min(1.0, ct / 2))) / (2 * lq)
        if b < 1e-7 and eps == 0.5:
            raise UnclassifiableError("principal series with b = 0, epsilon = 1/2 is reducible")
        return SeriesLabel("principal", {"b": b}, eps)
    if ct < -2:
        return SeriesLabel("strange", {"a": math.acosh(-ct / 2) / (2 * lq)}, eps)
    if ct < q0 + 1 / q0 and eps == 0.0:
        s = math.acosh(ct / 2) / lq
        return SeriesLabel("complementary", {"sigma": (s - 1) / 2}, 0.0)
    raise UnclassifiableError("Casimir value outside the principal, strange and complementary ranges")


# ---------------------------------------------------------------------------
# positivity of phi^S


def phi_positive_check(rep: OneDimRep, s: StarStructure, samples=200, seed=0, max_len=4, tol=1e-9) -> dict:
    """Sample phi(X* X) on random words and report the sign constraints on each node."""
    if rep.ctx.exact:
        raise AlgebraError("phi_positive_check uses numeric parameters")
    if s.cartan != rep.cartan:
        raise AlgebraError("star structure and representation have different rank")
    if not set(rep.S.indices) <= s.fixed_points():
        raise AlgebraError("S must consist of fixed points of eta")
    rng = random.Random(seed)
    from .algebra import _normalize_word

    violations = []
    values = []
    for t in range(samples):
        w = random_word(rep.cartan, rng, rng.randint(0, max_len)) if t else ()
        X = _normalize_word(rep.cartan, w)
        val = phi_eval(rep, mul(star(s, X), X))
        val = complex(val)
        values.append(val.real)
        if abs(val.imag) > tol * max(1.0, abs(val)) or val.real < -tol * max(1.0, abs(val)):
            violations.append({"word": _word_str(w), "value": [val.real, val.imag]})
    constraints = {}
    for j in rep.S.indices:
        lam = complex(rep.lam[j - 1])
        mu = complex(rep.mu[j])
        real = is_real(lam) and is_real(mu)
        sj = s.signs[j - 1]
        constraints[j] = {
            "lambda_real": is_real(lam),
            "mu_real": is_real(mu),
            "s": sj,
            "s_mu_lambda_positive": bool(real and sj * mu.real * lam.real > 0),
        }
    ok = not violations and all(v["s_mu_lambda_positive"] for v in constraints.values())
    return {"samples": samples, "violations": violations, "min_value": min(values) if values else None,
            "sign_constraints": constraints, "ok": ok}


def _word_str(w):
    return "*".join(f"{'EKF'[k]}{i + 1}" + (f"^{p}" if p != 1 else "") for k, i, p in w) or "1"


def series_report(p: Rank1Sl2Params) -> dict:
    from .scalars import to_json_scalar

    nec = necessary_conditions(p)
    out = {
        "params": {"q": p.q0, "lambda": to_json_scalar(p.lam), "mu": to_json_scalar(p.mu)},
        "necessary": nec,
        "positivity": {"E": None, "F": None},
        "series": None,
        "casimir": to_json_scalar(_m.casimir_scalar(p)),
        "epsilon": None,
    }
    if nec["ok"] and _m.is_irreducible(p):
        v = is_unitarizable(p, check_irreducible=False)
        out["positivity"] = v["positivity"]
    try:
        label = classify_series(p)
    except (UnclassifiableError, ReducibleInputError) as exc:
        out["series"] = None
        out["reason"] = str(exc)
    else:
        out["series"] = label.to_json()
        out["epsilon"] = label.epsilon
    return out
