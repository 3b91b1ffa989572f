"""Rank one Mathieu modules M^S_{lambda,mu} of U_q(sl(n+1)) for strongly orthogonal S.

The full weight basis is never built. The module is probed through the
cyclic vector (phi^S values of products), the sl(2) copies at the nodes of S,
and the invariant subspace generated by F_j . 1 for j outside S.
"""

from __future__ import annotations

import random

from .algebra import E, F, K, AlgebraError, CartanData, Element, _normalize_word, cartan, commutator, gen
from .centralizer import OneDimRep, SubsetS, h_minus, phi_eval, split_U0S
from .scalars import to_json_scalar
from . import sl2module as _m


class RankNParams:
    def __init__(self, cartan_data: CartanData, S, lam, mu=None, q0=None, tol=1e-9):
        if not isinstance(S, SubsetS):
            S = SubsetS(cartan_data, S)
        self.cartan = cartan_data
        self.S = S
        self.rep = OneDimRep(S, lam, mu, q0=q0, tol=tol)
        self.q0 = q0
        self.tol = tol

    @property
    def lam(self):
        return self.rep.lam

    @property
    def mu(self):
        return self.rep.mu

    @property
    def degenerate(self):
        return not self.S.indices


def u0S_generators(cartan_data: CartanData, S) -> list:
    """K_i^{+-1} for all i and E_jF_j for j in S."""
    if not isinstance(S, SubsetS):
        S = SubsetS(cartan_data, S)
    out = []
    for i in range(1, cartan_data.rank + 1):
        out.append(gen(cartan_data, "K", i))
        out.append(gen(cartan_data, "K", i, -1))
    for j in S:
        out.append(_normalize_word(cartan_data, ((E, j - 1, 1), (F, j - 1, 1))))
    return out


def generators_commute(gens) -> bool:
    return all(commutator(a, b).is_zero() for i, a in enumerate(gens) for b in gens[i + 1:])


def per_node_module(p: RankNParams, j: int) -> _m.Rank1Sl2Params:
    """The sl(2) module of node j in S, with parameters (lambda_j, mu_j)."""
    if j not in p.S:
        raise AlgebraError(f"node {j} is not in S = {list(p.S.indices)}")
    return _m.Rank1Sl2Params(p.lam[j - 1], p.mu[j], q0=p.q0, tol=p.tol)


def _word_root(word, n):
    r = [0] * n
    for kind, i, pw in word:
        if kind == E:
            r[i] += pw
        elif kind == F:
            r[i] -= pw
    return r


def sample_witness_words(cartan_data: CartanData, j: int, count: int, seed=0, max_len=8):
    """Random words X (uniform letters, length <= max_len) with root(X F_j) = 0."""
    rng = random.Random(seed)
    n = cartan_data.rank
    target = [1 if i == j - 1 else 0 for i in range(n)]
    out = []
    tries = 0
    while len(out) < count:
        tries += 1
        L = rng.randint(1, max_len)
        w = []
        for _ in range(L):
            kind = rng.choice((E, F, K))
            w.append((kind, rng.randrange(n), rng.choice((1, -1)) if kind == K else 1))
        if _word_root(w, n) == target:
            out.append(tuple(w))
    return out, tries


def proper_submodule_witness(p: RankNParams, j: int, sample_count=1000, seed=0, max_len=8) -> dict:
    """Check phi(X F_j) = 0 and h_j^-(X F_j) >= 1 on random root-matched words X."""
    if j in p.S:
        raise AlgebraError(f"witness needs j outside S, got j = {j}")
    p.cartan.check_index(j)
    words, tries = sample_witness_words(p.cartan, j, sample_count, seed, max_len)
    fails = []
    zero_products = 0
    for w in words:
        x = _normalize_word(p.cartan, w + ((F, j - 1, 1),))
        val = phi_eval(p.rep, x)
        if x.is_zero():
            zero_products += 1
            hm = None
        else:
            hm = h_minus(x, j)
        if not p.rep.ctx.is_zero(val, 0) or (hm is not None and hm < 1):
            fails.append({"word": "*".join(f"{'EKF'[k]}{i + 1}" + (f"^{pw}" if pw != 1 else "") for k, i, pw in w),
                          "phi": to_json_scalar(val), "h_minus": hm})
    return {
        "j": j,
        "samples": len(words),
        "draws": tries,
        "seed": seed,
        "zero_products": zero_products,
        "failures": fails,
        "passed": not fails,
    }


def per_node_consistency(p: RankNParams, j: int, kmax=6) -> bool:
    """phi(E_j^k F_j^k) against the sl(2) module action on the cyclic vector."""
    node = per_node_module(p, j)
    sl2 = _m.SL2
    for k in range(kmax + 1):
        x = _normalize_word(p.cartan, ((E, j - 1, k), (F, j - 1, k))) if k else Element.scalar(p.cartan)
        y = _normalize_word(sl2, ((E, 0, k), (F, 0, k))) if k else Element.scalar(sl2)
        lhs = phi_eval(p.rep, x)
        rhs = _m.act_element(node, y, _m.basis(0, node)).coefficient(0)
        if not p.rep.ctx.close(lhs, rhs):
            return False
    return True


def rankn_analyze(p: RankNParams, samples=200, seed=0) -> dict:
    """Aggregate report: per-node sl(2) analysis, phi spot checks, witnesses, sign conditions."""
    n = p.cartan.rank
    nodes = {}
    for j in p.S:
        node = per_node_module(p, j)
        sub = _m.submodules(node)
        nodes[str(j)] = {
            "lambda": to_json_scalar(node.lam),
            "mu": to_json_scalar(node.mu),
            "casimir": to_json_scalar(_m.casimir_scalar(node)),
            "nE": _m.solve_nE(node),
            "nF": _m.solve_nF(node),
            "irreducible": sub["irreducible"],
            "phi_consistent": per_node_consistency(p, j),
        }
    checks = []
    for i in range(1, n + 1):
        v = phi_eval(p.rep, gen(p.cartan, "K", i))
        checks.append({"x": f"K{i}", "phi": to_json_scalar(v), "expected": to_json_scalar(p.lam[i - 1]),
                       "ok": p.rep.ctx.close(v, p.lam[i - 1])})
        ef = _normalize_word(p.cartan, ((E, i - 1, 1), (F, i - 1, 1)))
        v = phi_eval(p.rep, ef)
        exp = p.mu[i] if i in p.S else 0
        checks.append({"x": f"E{i}*F{i}", "phi": to_json_scalar(v), "expected": to_json_scalar(p.rep.ctx.coerce(exp)),
                       "ok": p.rep.ctx.close(v, p.rep.ctx.coerce(exp))})
    witnesses = {}
    for j in range(1, n + 1):
        if j not in p.S:
            witnesses[str(j)] = proper_submodule_witness(p, j, samples, seed)
    gens = u0S_generators(p.cartan, p.S)
    signs = {}
    for j in p.S:
        if p.q0 is None:
            signs[str(j)] = {"note": "sign conditions need a numeric q"}
            continue
        lam, mu = complex(p.lam[j - 1]), complex(p.mu[j])
        real = abs(lam.imag) < 1e-12 and abs(mu.imag) < 1e-12
        signs[str(j)] = {
            "real": real,
            "mu_lambda": (mu * lam).real if real else None,
            "compatible_sign": (1 if (mu * lam).real > 0 else -1) if real else None,
        }
    positivity = None
    if p.q0 is not None and all(v["real"] for v in signs.values()):
        from .unitarity import StarStructure, phi_positive_check

        sg = [signs[str(i)]["compatible_sign"] if i in p.S else 1 for i in range(1, n + 1)]
        positivity = phi_positive_check(p.rep, StarStructure(p.cartan, None, sg), samples=min(samples, 100), seed=seed)
        positivity["signs"] = sg
    report = {
        "rank": n,
        "S": list(p.S.indices),
        "degenerate": p.degenerate,
        "u0S_generators": [str(g) for g in gens],
        "u0S_commutative": generators_commute(gens),
        "nodes": nodes,
        "phi_checks": checks,
        "witnesses": witnesses,
        "sign_conditions": signs,
        "phi_positivity": positivity,
    }
    if p.degenerate:
        report["structure"] = ("degenerate module: U_0 acts through the Cartan part, the vectors F_j.1 "
                               "generate proper submodules and the quotient is a lowest weight module "
                               "with lowest weight lambda")
    return report
