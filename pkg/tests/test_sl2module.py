import random

import pytest

from qmathieu.algebra import AlgebraError, gen, normalize
from qmathieu.qfield import Q, qint, qrat
from qmathieu import sl2module as m
from qmathieu.sl2module import Rank1Sl2Params, SL2, act_E, act_F, act_K, basis

QM = Q - Q ** -1


def generic(lam=Q ** 3, mu=qrat(2)):
    return Rank1Sl2Params(lam, mu)


def test_actions_on_small_vectors():
    p = generic()
    assert act_E(p, basis(-1)) == basis(0).scale(p.mu)
    assert act_K(p, basis(0)) == basis(0).scale(p.lam)
    assert act_F(p, basis(1)) == basis(0).scale(p.mu - (p.lam - 1 / p.lam) / QM)
    assert act_E(p, basis(3)) == basis(4)
    assert act_F(p, basis(-2)) == basis(-3)


def test_act_element():
    p = generic()
    one = normalize("K1*K1^-1", SL2)
    v = basis(2).scale(Q) + basis(-3)
    assert m.act_element(p, one, v) == v
    x = normalize("E1^2*F1^2", SL2)
    lam, mu = p.lam, p.mu
    expected = mu * (mu + (Q ** -2 * lam - Q ** 2 / lam) / QM)
    assert m.act_element(p, x, basis(0)) == basis(0).scale(expected)


def test_module_relations():
    p = generic(Q ** -2 * 3, Q + 4)
    E1, F1, K1, Ki = gen(SL2, "E", 1), gen(SL2, "F", 1), gen(SL2, "K", 1), gen(SL2, "K", 1, -1)
    for k in range(-8, 9):
        v = basis(k)
        lhs = act_E(p, act_F(p, v)) - act_F(p, act_E(p, v))
        assert lhs == m.act_element(p, (K1 - Ki) / QM, v)
        assert act_K(p, act_E(p, v)) == act_E(p, act_K(p, v)).scale(Q ** 2)
        assert m.act_element(p, normalize("K1*E1", SL2), v) == m.act_element(p, normalize("E1*K1", SL2), v).scale(Q ** 2)


def test_casimir():
    assert m.casimir_scalar(Rank1Sl2Params(1, 0)) == (Q + Q ** -1) / QM ** 2
    p = generic()
    assert m.casimir_scalar(p) == p.mu + (Q ** -1 * p.lam + Q / p.lam) / QM ** 2
    om = m.casimir_element()
    for k in range(-10, 11):
        assert m.act_element(p, om, basis(k)) == basis(k).scale(m.casimir_scalar(p))


def test_reducible_example():
    p = Rank1Sl2Params(1, Q + Q ** -1)
    assert m.solve_nE(p) == 2 and m.solve_nF(p) == 2
    assert act_E(p, basis(-2)).is_zero()
    assert act_F(p, basis(2)).is_zero()
    sub = m.submodules(p)
    assert sub["kind"] == "both"
    assert sub["quotient_dim"] == 3 and sub["quotient_indices"] == [-1, 1]
    assert not m.is_irreducible(p)


def test_numeric_irreducible():
    p = Rank1Sl2Params(0.5 ** 0.37, -1.0, q0=0.5)
    assert m.solve_nE(p) is None and m.solve_nF(p) is None
    assert m.submodules(p)["kind"] == "none"


def test_numeric_matches_exact():
    ex = Rank1Sl2Params(1, Q + Q ** -1)
    nu = Rank1Sl2Params(1, 2.5, q0=0.5)
    assert m.solve_nE(nu) == m.solve_nE(ex) == 2
    assert m.solve_nF(nu) == 2


def test_degenerate():
    for k in (1, 2, 3):
        p = Rank1Sl2Params(Q ** (2 * k), 0)
        assert m.solve_nE(p) == 2 * k
        assert 1 in m.solutions_nE(p)
        assert act_E(p, basis(-1)).is_zero()
    # F kills E.1 exactly when lambda = +-1
    assert act_F(Rank1Sl2Params(1, 0), basis(1)).is_zero()
    assert act_F(Rank1Sl2Params(-1, 0), basis(1)).is_zero()
    assert not act_F(Rank1Sl2Params(Q ** 2, 0), basis(1)).is_zero()
    rep = m.verma_quotient_report(Rank1Sl2Params(Q ** 2 * 3, 0))
    assert rep["E_on_F1_is_zero"] and rep["submodule_W"]["invariant"]
    assert not rep["quotient"]["finite_dimensional"]
    with pytest.raises(AlgebraError):
        m.verma_quotient_report(generic())


def test_two_solutions_need_special_lambda():
    # lambda = q^(n1 + n2 - 1): here n1 = 2, n2 = 3
    p = Rank1Sl2Params(Q ** 4, -(Q + Q ** -1))
    assert m.solutions_nE(p) == [2, 3]
    for n in (2, 3):
        assert act_E(p, basis(-n)).is_zero()


def test_equivalent_params():
    p = generic()
    assert m.equivalent_params(p, 0) == p
    p1 = m.equivalent_params(p, 1)
    assert p1.lam == p.lam * Q ** 2
    assert p1.mu == p.mu - (p.lam - 1 / p.lam) / QM
    for n in range(-4, 5):
        assert m.equivalent_params(m.equivalent_params(p, n), -n) == p
        assert m.casimir_scalar(m.equivalent_params(p, n)) == m.casimir_scalar(p)


def test_are_equivalent():
    p = generic()
    assert m.are_equivalent(p, p) == 0
    assert m.are_equivalent(p, m.equivalent_params(p, 3)) == 3
    assert m.are_equivalent(p, m.equivalent_params(p, -2)) == -2
    bad = m.equivalent_params(p, 3).replace(mu=m.equivalent_params(p, 3).mu + 1)
    assert m.are_equivalent(p, bad) is None
    assert m.are_equivalent(p, generic(lam=Q * 7)) is None
    with pytest.raises(m.ReducibleInputError):
        m.are_equivalent(p, Rank1Sl2Params(1, Q + Q ** -1))


def test_are_equivalent_numeric():
    p = Rank1Sl2Params(0.7, -1.3, q0=0.5)
    assert m.are_equivalent(p, m.equivalent_params(p, 2)) == 2


def test_intertwiner():
    p = generic()
    for n in range(0, 4):
        p2 = m.equivalent_params(p, n)
        assert m.intertwiner_apply(p, n, basis(0)) == basis(-n)
        for k in range(-6, 7):
            v = basis(k)
            w = m.intertwiner_apply(p, n, v)
            assert m.intertwiner_apply(p, n, act_E(p, v)) == act_E(p2, w)
            assert m.intertwiner_apply(p, n, act_F(p, v)) == act_F(p2, w)
            assert m.intertwiner_apply(p, n, act_K(p, v)) == act_K(p2, w)
    v = basis(3).scale(Q) + basis(-1)
    assert m.intertwiner_apply(p, 0, v) == v


def test_trace_map():
    p = generic()
    assert m.trace_map(p, 0, 1, 0) == p.mu
    for k in range(-5, 6):
        assert m.trace_map(p, k, 0, 1) == p.lam * Q ** (2 * k)
        fe = m.act_element(p, normalize("E1*F1", SL2), basis(k)).coefficient(k)
        assert m.trace_map(p, k, 1, 0) == fe


def test_analyze_schema():
    rep = m.analyze(Rank1Sl2Params(1, Q + Q ** -1))
    assert rep["nE"] == 2 and rep["nF"] == 2 and rep["quotient_dim"] == 3
    assert set(rep) >= {"params", "casimir", "submodules", "irreducible", "quotient_dims"}


def test_zero_lambda_rejected():
    with pytest.raises(AlgebraError):
        Rank1Sl2Params(0, 1)


def test_random_exact_params_irreducible_mostly():
    rng = random.Random(0)
    from qmathieu.verify import random_exact_params
    irreducible = sum(m.is_irreducible(random_exact_params(rng)) for _ in range(30))
    assert irreducible >= 20
