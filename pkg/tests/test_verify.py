import pytest

from qmathieu import verify


def test_all_suites_registered():
    assert verify.ORDER == [n for n in verify.ORDER if n in verify.SUITES]
    assert set(verify.ORDER) == set(verify.SUITES)


@pytest.mark.parametrize("name,kw", [
    ("qfield", {"samples": 50}),
    ("oracle", {"samples": 30}),
    ("termination", {"samples": 6}),
    ("homogeneity", {"samples": 30}),
    ("heights", {"samples": 40}),
    ("orthogonal", {"samples": 40}),
    ("centralizer", {"samples": 20}),
    ("star", {"samples": 5}),
    ("gram", {"kmax": 3}),
    ("rankn", {"samples": 40, "kmax": 3}),
])
def test_suites_small(name, kw):
    res = verify.run_suite(name, seed=1, **kw)
    assert res.passed, res.failures
    assert res.checks > 0


def test_suite_result_failure_cap():
    r = verify.SuiteResult("x", max_failures=2)
    for i in range(5):
        r.check(False, i)
    assert not r.passed and len(r.failures) == 2 and r.info["truncated_failures"] == 3
    assert r.to_json()["passed"] is False


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run_suites(["nope"])


def test_termination_records_bound():
    res = verify.run_suite("termination", samples=3, ranks=(1, 2))
    assert set(res.info["max_rewrite_steps"]) == {"1", "2"}


def test_commutation_sign_variant_is_rejected():
    lhs, rhs = verify._commutation_sides(3, 0, sign=+1)["F E^n"]
    assert lhs != rhs
    lhs, rhs = verify._commutation_sides(3, 0, sign=-1)["F E^n"]
    assert lhs == rhs
