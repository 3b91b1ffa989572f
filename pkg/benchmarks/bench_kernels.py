"""Compare the compiled and pure-Python rewriting kernels.

    python3 benchmarks/bench_kernels.py [--words 300] [--repeat 3]

Both backends are fed the same random words; their outputs are checked for
equality before timings are reported.
"""

import argparse
import random
import time

from qmathieu._kernels import _pure

try:
    from qmathieu._kernels import _cy
except ImportError:
    _cy = None

from qmathieu.algebra import cartan
from qmathieu.centralizer import random_word


def workload(rank, count, length, seed):
    rng = random.Random(seed)
    c = cartan(rank)
    return c.A, [random_word(c, rng, length) for _ in range(count)]


def run(mod, A, words, rank):
    return [mod.normalize_letters(w, rank, A) for w in words]


def poly_workload(count, seed):
    rng = random.Random(seed)
    return [([rng.randint(-9, 9) for _ in range(40)], [rng.randint(-9, 9) for _ in range(40)]) for _ in range(count)]


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--words", type=int, default=300)
    ap.add_argument("--length", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if _cy is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'task':<24}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}")
    for rank in (1, 2, 3, 4):
        A, words = workload(rank, args.words, args.length, args.seed)
        tp, outp = timed(lambda: run(_pure, A, words, rank), args.repeat)
        if _cy is None:
            print(f"{'normalize rank ' + str(rank):<24}{tp:>12.4f}{'-':>12}{'-':>10}")
            continue
        tc, outc = timed(lambda: run(_cy, A, words, rank), args.repeat)
        assert outp == outc, f"backends disagree in rank {rank}"
        print(f"{'normalize rank ' + str(rank):<24}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")
    pairs = poly_workload(2000, args.seed)
    tp, outp = timed(lambda: [_pure.poly_mul(a, b) for a, b in pairs], args.repeat)
    if _cy is not None:
        tc, outc = timed(lambda: [_cy.poly_mul(a, b) for a, b in pairs], args.repeat)
        assert outp == outc
        print(f"{'poly_mul 40x40':<24}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
