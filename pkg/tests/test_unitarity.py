import math
import random

import pytest

from qmathieu.algebra import AlgebraError, cartan, gen, mul, normalize
from qmathieu.centralizer import OneDimRep, SubsetS, random_word
from qmathieu.qfield import Q, qrat
from qmathieu.scalars import SympyContext
from qmathieu import sl2module as m
from qmathieu import unitarity as u
from qmathieu.sl2module import Rank1Sl2Params, SL2

Q0 = 0.5


def test_star_su11():
    s = u.su11()
    K, E, F = gen(SL2, "K", 1), gen(SL2, "E", 1), gen(SL2, "F", 1)
    assert u.star(s, K) == K
    assert u.star(s, E) == -normalize("F1*K1", SL2)
    assert u.star(s, F) == -normalize("K1^-1*E1", SL2)
    assert u.star(s, u.star(s, E)) == E


def test_star_antihomomorphism():
    rng = random.Random(0)
    for s in (u.su11(), u.StarStructure(cartan(2), [2, 1], [1, 1])):
        c = s.cartan
        for _ in range(25):
            x = normalize(list(random_word(c, rng, rng.randint(0, 6))), c)
            y = normalize(list(random_word(c, rng, 3)), c)
            assert u.star(s, mul(x, y)) == mul(u.star(s, y), u.star(s, x))
            assert u.star(s, u.star(s, x)) == x


def test_star_validation():
    with pytest.raises(AlgebraError):
        u.StarStructure(cartan(3), [3, 2, 1], [-1, 1, 1])
    with pytest.raises(AlgebraError):
        u.StarStructure(cartan(3), [2, 1, 3], [1, 1, 1])


def test_necessary_conditions():
    assert u.necessary_conditions(Rank1Sl2Params(1, -1, q0=Q0))["ok"]
    assert not u.necessary_conditions(Rank1Sl2Params(1, 1, q0=Q0))["ok"]
    assert not u.necessary_conditions(Rank1Sl2Params(1j, -1, q0=Q0))["ok"]
    with pytest.raises(AlgebraError):
        u.necessary_conditions(Rank1Sl2Params(1, -1))


def test_norms_small():
    p = Rank1Sl2Params(Q ** 2, -(Q + 3))
    assert u.norm_sq_E(p, 0) == 1 and u.norm_sq_F(p, 0) == 1
    # <E.1|E.1> = <1|E* E.1> with E* = -FK
    direct = -Q ** 2 * p.lam * m.coef_F_on_E(p, 1)
    assert u.norm_sq_E(p, 1) == direct
    M = (Q - Q ** -1) ** 2 * p.mu
    assert u.norm_sq_E(p, 1) == Q / (Q - Q ** -1) ** 2 * (1 - (p.lam ** 2 + Q ** 2 + Q * M * p.lam) + Q ** 2 * p.lam ** 2)


def test_norms_symbolic():
    ctx = SympyContext()
    lam, M = ctx.symbols
    p = Rank1Sl2Params.with_context(lam, M / m._qm2(ctx), ctx)
    for n in range(7):
        assert u.norm_sq_E(p, n) == u.norm_sq_E_recursive(p, n)
        assert u.norm_sq_F(p, n) == u.norm_sq_F_recursive(p, n)


def test_principal_b0():
    p = u.params_for_series(u.SeriesLabel("principal", {"b": 0.0}), Q0)
    assert p.lam == pytest.approx(1.0)
    assert p.mu == pytest.approx((2 - Q0 - 1 / Q0) / (Q0 - 1 / Q0) ** 2)
    assert p.mu < 0
    assert u.is_unitarizable(p)["unitarizable"]
    assert all(u.norm_sq_E(p, n) > 0 and u.norm_sq_F(p, n) > 0 for n in range(201))


def test_rejected_at_necessary_stage():
    v = u.is_unitarizable(Rank1Sl2Params(1, 1, q0=Q0))
    assert not v["unitarizable"] and v["stage"] == "necessary"


def test_first_failing_n():
    lam = 1.0
    # choose M so that the E factor is negative at x = q^2 but positive at x = 1
    x = Q0 ** 2
    s_needed = (1 + Q0 ** 2 * lam ** 2 * x * x) / x + 0.5
    M = (s_needed - lam ** 2 - Q0 ** 2) / (Q0 * lam)
    p = Rank1Sl2Params(lam, M / (Q0 - 1 / Q0) ** 2, q0=Q0)
    if u.necessary_conditions(p)["ok"]:
        v = u.is_unitarizable(p, check_irreducible=False)
        assert v["positivity"]["E"]["first_failing_n"] == u.brute_force_positive(p)["E"]
        assert u.norm_sq_E(p, v["positivity"]["E"]["first_failing_n"]) <= 0


def test_interval_vs_brute_force():
    rng = random.Random(7)
    for _ in range(40):
        p = Rank1Sl2Params(math.exp(rng.uniform(-2, 2)), -math.exp(rng.uniform(-3, 3)), q0=Q0)
        bf = u.brute_force_positive(p, 300)
        for which in "EF":
            assert u._branch_verdict(p, which)["first_failing_n"] == bf[which]


@pytest.mark.parametrize("label", [
    u.SeriesLabel("principal", {"b": 1.0}, 0.0),
    u.SeriesLabel("principal", {"b": 0.3}, 0.5),
    u.SeriesLabel("strange", {"a": 0.8}, 0.0),
    u.SeriesLabel("strange", {"a": 1.7}, 0.5),
    u.SeriesLabel("complementary", {"sigma": -0.3}, 0.0),
])
def test_classification_round_trip(label):
    p = u.params_for_series(label, Q0)
    assert u.is_unitarizable(p)["unitarizable"]
    assert u.classify_series(p).key(6) == label.key(6)
    for n in (-2, 1, 3):
        assert u.classify_series(m.equivalent_params(p, n)).key(6) == label.key(6)


def test_discrete_series_route():
    p = u.params_for_series(u.SeriesLabel("positive_discrete", {"k": 2}), Q0)
    assert p.degenerate
    assert u.classify_series(p).kind == "positive_discrete"
    n = u.params_for_series(u.SeriesLabel("negative_discrete", {"k": 1}), Q0)
    assert u.classify_series(n).kind == "negative_discrete"


def test_series_label_validation():
    with pytest.raises(ValueError):
        u.SeriesLabel("foo")
    with pytest.raises(ValueError):
        u.SeriesLabel("principal", {"b": 1}, 0.25)


def test_gram_consistency():
    p = u.params_for_series(u.SeriesLabel("principal", {"b": 0.7}), Q0)
    s = u.su11()
    E = gen(SL2, "E", 1)
    Es = u.star(s, E)
    for k in range(-5, 5):
        v, w = m.basis(k, p), m.basis(k + 1, p)
        lhs = u.inner(p, m.act_element(p, E, v), w)
        rhs = u.inner(p, v, m.act_element(p, Es, w))
        assert lhs == pytest.approx(rhs, rel=1e-10)


def test_ab_form_roots():
    p = Rank1Sl2Params(1.3, -2.0, q0=Q0)
    A, B, C, D = u.ab_form(p)
    for r in (A, B):
        assert abs(u.factor_E(p, 1 / r)) < 1e-9 if r else True


def test_phi_positive_check_rank2():
    c = cartan(2)
    rep = OneDimRep(SubsetS(c, [1]), [1.0, 0.8], {1: -1.2}, q0=Q0)
    res = u.phi_positive_check(rep, u.StarStructure(c, None, [-1, 1]), samples=40)
    assert res["sign_constraints"][1]["s_mu_lambda_positive"]
    with pytest.raises(AlgebraError):
        u.phi_positive_check(OneDimRep(SubsetS(c, [1]), [Q, Q], {1: Q}), u.StarStructure(c), samples=1)
