import pytest

from qmathieu.algebra import AlgebraError, cartan, commutator, normalize
from qmathieu.centralizer import h_minus, phi_eval
from qmathieu.qfield import Q, qrat
from qmathieu import rankn as rk
from qmathieu import sl2module as m


def test_u0S_generators():
    gens = rk.u0S_generators(cartan(2), [1])
    assert [str(g) for g in gens] == ["K1", "K1^-1", "K2", "K2^-1", "E1*F1"]
    gens = rk.u0S_generators(cartan(3), [1, 3])
    assert rk.generators_commute(gens)
    assert commutator(normalize("E1*F1", cartan(3)), normalize("E3*F3", cartan(3))).is_zero()
    assert all(len(g.terms) == 1 and not list(g.terms)[0][0] for g in rk.u0S_generators(cartan(3), []))


def test_per_node_module():
    p = rk.RankNParams(cartan(2), [1], [qrat(1), Q], {1: Q + Q ** -1})
    node = rk.per_node_module(p, 1)
    assert m.solve_nE(node) == 2 and m.solve_nF(node) == 2
    g = rk.RankNParams(cartan(2), [1], [0.5 ** 0.37, 1.3], {1: -0.7}, q0=0.5)
    assert m.is_irreducible(rk.per_node_module(g, 1))
    with pytest.raises(AlgebraError):
        rk.per_node_module(p, 2)


def test_witness_examples():
    c = cartan(2)
    p = rk.RankNParams(c, [1], [Q ** 2, qrat(3)], {1: Q + 1})
    x = normalize("E2*F2", c)
    assert phi_eval(p.rep, x) == 0
    y = normalize("E1*E2*F1*F2", c)
    assert phi_eval(p.rep, y) == 0 and h_minus(y, 2) >= 1
    w = rk.proper_submodule_witness(p, 2, sample_count=200, seed=3)
    assert w["passed"] and w["samples"] == 200
    with pytest.raises(AlgebraError):
        rk.proper_submodule_witness(p, 1)


def test_witness_sl4():
    p = rk.RankNParams(cartan(3), [1, 3], [Q, qrat(2), Q ** -1], {1: qrat(2), 3: Q})
    w = rk.proper_submodule_witness(p, 2, sample_count=300, seed=1)
    assert w["passed"]


def test_per_node_consistency():
    p = rk.RankNParams(cartan(3), [1, 3], [Q ** 2, qrat(-2), Q ** -1], {1: Q + 1, 3: qrat(5)})
    assert rk.per_node_consistency(p, 1, 6) and rk.per_node_consistency(p, 3, 6)


def test_analyze_reports():
    p = rk.RankNParams(cartan(2), [1], [0.8, 1.7], {1: -0.9}, q0=0.5)
    rep = rk.rankn_analyze(p, samples=50)
    assert rep["nodes"]["1"]["irreducible"]
    assert rep["witnesses"]["2"]["passed"]
    assert all(c["ok"] for c in rep["phi_checks"])
    assert rep["phi_positivity"] is not None
    deg = rk.rankn_analyze(rk.RankNParams(cartan(2), [], [Q, Q], {}), samples=20)
    assert deg["degenerate"] and "lowest weight" in deg["structure"]
    big = rk.rankn_analyze(rk.RankNParams(cartan(4), [1, 3], [Q, 2, 3, Q ** -1], {1: Q, 3: qrat(2)}), samples=30)
    assert set(big["nodes"]) == {"1", "3"} and set(big["witnesses"]) == {"2", "4"}
    assert all(w["passed"] for w in big["witnesses"].values())
