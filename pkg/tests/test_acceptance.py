"""Acceptance criteria 1-11, each with its sample sizes and time limit.

Every test prints (and records for the terminal summary) one line
``criterion N: PASS|FAIL ...``. Run ``python3 tests/test_acceptance.py`` for
the same lines without pytest.
"""

import time

from qmathieu import verify

RESULTS = []


def _run(number, title, limit, fn):
    t = time.perf_counter()
    results = fn()
    elapsed = time.perf_counter() - t
    ok = all(r.passed for r in results) and elapsed < limit
    checks = sum(r.checks for r in results)
    failures = [f for r in results for f in r.failures][:3]
    line = (f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title:<28} {checks:>6} checks "
            f"{elapsed:6.2f}s (limit {limit}s)" + (f"  {failures}" if failures else ""))
    RESULTS.append(line)
    print(line)
    return ok, results, elapsed


def test_criterion_01_relations():
    ok, res, _ = _run(1, "relations (ranks 1-4)", 10, lambda: [verify.suite_relations(ranks=(1, 2, 3, 4))])
    assert ok, res[0].failures


def test_criterion_02_commutation():
    ok, res, _ = _run(2, "rank one commutation, n,m<=8", 10, lambda: [verify.suite_commutation(nmax=8)])
    assert ok, res[0].failures


def test_criterion_03_oracle():
    ok, res, _ = _run(3, "oracle, 1000 words/rank", 60,
                      lambda: [verify.suite_oracle(samples=1000, ranks=(1, 2, 3, 4))])
    assert ok, res[0].failures


def test_criterion_04_heights():
    ok, res, _ = _run(4, "heights, 1000 pairs", 60, lambda: [verify.suite_heights(samples=1000)])
    assert ok, res[0].failures


def test_criterion_05_orthogonal():
    ok, res, _ = _run(5, "commutativity and ideal", 60, lambda: [verify.suite_orthogonal(samples=500)])
    assert ok, res[0].failures
    assert res[0].info["nonzero_products"] >= 500


def test_criterion_06_module():
    ok, res, _ = _run(6, "module axioms, |k|<=20", 10, lambda: [verify.suite_module(kmax=20)])
    assert ok, res[0].failures


def test_criterion_07_reducibility():
    ok, res, _ = _run(7, "reducibility", 10, lambda: [verify.suite_reducibility(samples=1000)])
    assert ok, res[0].failures
    assert res[0].info["draws_with_several_solutions"] == 0


def test_criterion_08_equivalence():
    ok, res, _ = _run(8, "equivalence and intertwiners", 30, lambda: [verify.suite_equivalence(sets=10, kmax=10)])
    assert ok, res[0].failures


def test_criterion_09_unitarity():
    ok, res, _ = _run(9, "norms and positivity", 60,
                      lambda: [verify.suite_unitarity(sets=100, q0=0.5, nsym=10, nprincipal=200, kmax=500)])
    assert ok, res[0].failures


def test_criterion_10_classification():
    ok, res, _ = _run(10, "classification round trip", 30, lambda: [verify.suite_classification(q0=0.5)])
    assert ok, res[0].failures
    assert res[0].info["labels"] == {"principal": 50, "strange": 20, "complementary": 20}


def test_criterion_11_rankn():
    ok, res, _ = _run(11, "rank n witnesses", 120, lambda: [verify.suite_rankn(samples=1000, kmax=6)])
    assert ok, res[0].failures


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
