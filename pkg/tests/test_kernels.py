import random

import pytest

from qmathieu import _kernels
from qmathieu._kernels import _pure
from qmathieu.algebra import cartan
from qmathieu.centralizer import random_word

try:
    from qmathieu._kernels import _cy
except ImportError:
    _cy = None

needs_cy = pytest.mark.skipif(_cy is None, reason="compiled kernels not built")


def test_backend_name():
    assert _kernels.BACKEND in ("cython", "python")
    if _cy is not None and not __import__("os").environ.get("QMATHIEU_PURE"):
        assert _kernels.BACKEND == "cython"


@needs_cy
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_backends_agree(n):
    rng = random.Random(n)
    A = cartan(n).A
    for _ in range(200):
        w = random_word(cartan(n), rng, rng.randint(0, 10))
        assert _pure.normalize_letters(w, n, A) == _cy.normalize_letters(w, n, A)


@needs_cy
def test_poly_mul_agree():
    rng = random.Random(0)
    for _ in range(200):
        a = [rng.randint(-50, 50) for _ in range(rng.randint(1, 12))]
        b = [rng.randint(-50, 50) for _ in range(rng.randint(1, 12))]
        assert _pure.poly_mul(a, b) == _cy.poly_mul(a, b)
    big = [10 ** 40, -3]
    assert _cy.poly_mul(big, big) == _pure.poly_mul(big, big)


def test_canonical_word():
    A = cartan(3).A
    assert _pure.canonical_word((2, 0), A) == (0, 2)
    assert _pure.canonical_word((1, 0), A) == (1, 0)
    assert _pure.append_letter((0, 2), 1, A) == (0, 2, 1)


@needs_cy
def test_mono_mul_agree():
    rng = random.Random(4)
    A = cartan(2).A
    for _ in range(100):
        m1 = (tuple(rng.randrange(2) for _ in range(2)), (rng.randint(-2, 2), 0), tuple(rng.randrange(2) for _ in range(2)))
        m2 = ((rng.randrange(2),), (0, rng.randint(-1, 1)), (rng.randrange(2),))
        assert _pure.mono_mul(m1, m2, A) == _cy.mono_mul(m1, m2, A)


def test_forced_fallback():
    import subprocess
    import sys

    code = ("import qmathieu._kernels as k; from qmathieu.algebra import normalize, cartan; "
            "print(k.BACKEND, normalize('F1*E1', cartan(1)))")
    env = dict(__import__("os").environ, QMATHIEU_PURE="1")
    res = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True)
    assert res.stdout.startswith("python E1*F1 - (q - q^-1)^-1*K1")
