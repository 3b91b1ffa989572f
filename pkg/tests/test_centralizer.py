import random

import pytest

from qmathieu.algebra import AlgebraError, E, F, K, Element, cartan, gen, mul, normalize
from qmathieu.centralizer import (NotInU0Error, OneDimRep, SubsetS, e_root, h_minus, h_plus, in_U0, phi_eval,
                                  random_root_zero_word, split_U0S)
from qmathieu.qfield import Q, qrat


def mono(x):
    (m,) = x.terms
    return m


def test_e_root():
    sl2, sl3 = cartan(1), cartan(2)
    assert tuple(e_root(mono(normalize("E1*F1", sl2)))) == (1,)
    assert tuple(e_root(mono(normalize("K1^3", sl2)))) == (0,)
    assert tuple(e_root(mono(normalize("E1*E2*F2*F1", sl3)))) == (1, 1)


def test_heights():
    sl2 = cartan(1)
    x = normalize("E1*F1", sl2)
    assert h_minus(x, 1) == 1 and h_plus(x, 1) == 1
    y = normalize("F1*E1", sl2)
    assert h_minus(y, 1) == 0 and h_plus(y, 1) == 1
    assert h_plus(normalize("K2^5", cartan(2)), 1) == 0
    with pytest.raises(AlgebraError):
        h_minus(Element(sl2), 1)


def test_in_U0():
    sl3 = cartan(2)
    assert in_U0(normalize("E1*F1", sl3))
    assert not in_U0(normalize("E1", sl3))
    assert in_U0(normalize("E1*E2*F2*F1 + K2", sl3))


def test_split():
    sl3 = cartan(2)
    S = SubsetS(sl3, [1])
    x = normalize("E1*F1", sl3)
    assert split_U0S(x, S) == (x, Element(sl3))
    y = normalize("E2*F2", sl3)
    assert split_U0S(y, S) == (Element(sl3), y)
    keep, ideal = split_U0S(normalize("K1 + E1*F1 + E2*F2", sl3), S)
    assert keep == normalize("K1 + E1*F1", sl3) and ideal == y
    with pytest.raises(NotInU0Error):
        split_U0S(normalize("E1", sl3), S)


def test_subset_must_be_orthogonal():
    with pytest.raises(AlgebraError):
        SubsetS(cartan(3), [1, 2])


def test_phi_examples():
    sl3 = cartan(2)
    lam, mu = [Q ** 3, qrat(2)], {1: Q + 1}
    rep = OneDimRep(SubsetS(sl3, [1]), lam, mu)
    assert phi_eval(rep, normalize("E1*F1", sl3)) == mu[1]
    assert phi_eval(rep, normalize("K1", sl3)) == lam[0]
    assert phi_eval(rep, normalize("K2^-1", sl3)) == 1 / lam[1]
    assert phi_eval(rep, normalize("E2*F2", sl3)).is_zero()
    l, m = lam[0], mu[1]
    expected = m * (m + (Q ** -2 * l - Q ** 2 / l) / (Q - Q ** -1))
    assert phi_eval(rep, normalize("E1^2*F1^2", sl3)) == expected


def test_phi_multiplicative():
    rng = random.Random(2)
    c = cartan(3)
    rep = OneDimRep(SubsetS(c, [1, 3]), [Q, qrat(-2), Q ** -1], {1: Q + 1, 3: qrat(5)})
    for _ in range(80):
        x = normalize(list(random_root_zero_word(c, rng)), c)
        y = normalize(list(random_root_zero_word(c, rng)), c)
        assert phi_eval(rep, mul(x, y)) == phi_eval(rep, x) * phi_eval(rep, y)


def test_phi_numeric_matches_exact():
    c = cartan(2)
    S = SubsetS(c, [1])
    ex = OneDimRep(S, [Q ** 2, qrat(3)], {1: Q + Q ** -1})
    nu = OneDimRep(S, [Q ** 2, qrat(3)], {1: Q + Q ** -1}, q0=0.5)
    x = normalize("E1*E1*F1*K2*F1 + E2*F2*E1*F1", c)
    from qmathieu.qfield import eval_at
    assert phi_eval(nu, x) == pytest.approx(float(eval_at(phi_eval(ex, x), 0.5)))


def test_rep_validation():
    c = cartan(2)
    with pytest.raises(AlgebraError):
        OneDimRep(SubsetS(c, [1]), [Q], {1: Q})
    with pytest.raises(AlgebraError):
        OneDimRep(SubsetS(c, [1]), [Q, Q], {})
    with pytest.raises(AlgebraError):
        OneDimRep(SubsetS(c, [1]), [Q, 0], {1: Q})
