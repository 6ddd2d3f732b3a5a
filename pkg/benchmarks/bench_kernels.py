"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [-n 200000] [--repeat 5]

Prints one line per kernel with the best-of-repeat time for each backend and
the speedup. Both backends must return identical arrays; the script aborts
otherwise.
"""

import argparse
import sys
import timeit

import numpy as np

from t2interval import kernels


def _inputs(n, seed):
    rng = np.random.default_rng(seed)
    A = np.sort(rng.uniform(-10, 10, (n, 4)), axis=1)
    B = np.sort(rng.uniform(0.1, 10, (n, 4)), axis=1)
    flip = rng.random(n) < 0.5
    B[flip] = -B[flip][:, ::-1]
    al, au = rng.uniform(-5, 0, n), rng.uniform(0, 5, n)
    bl, bu = rng.uniform(1, 2, n), rng.uniform(2, 3, n)
    T = np.sort(rng.normal(size=(n, 4)), axis=1)
    m = min(n, 1500)
    S = np.cumsum(rng.normal(scale=1e-4, size=(m, 4)), axis=0)
    S = np.sort(S, axis=1)
    I, J = rng.integers(0, n, n), rng.integers(0, n, n)
    return A, B, (al, au, bl, bu), T, S, I, J


def _cases(n, seed):
    A, B, t1, T, S, I, J = _inputs(n, seed)
    claimed = np.array([-30.0, -0.5, 0.5, 30.0])
    return {
        "formula_batch(mul)": lambda k: k.formula_batch(2, A, B),
        "formula_batch(div)": lambda k: k.formula_batch(3, A, B),
        "corner_batch(mul)": lambda k: k.corner_batch(2, A, B),
        "type1_batch(div)": lambda k: k.type1_batch(3, *t1),
        "membership_scan(mul)": lambda k: k.membership_scan(2, *t1, claimed),
        "distances_to": lambda k: k.distances_to(T, T[0]),
        "pair_distances": lambda k: k.pair_distances(T, I, J),
        "cauchy_scan": lambda k: k.cauchy_scan(S, 1.0),
    }


def _same(x, y):
    if isinstance(x, tuple):
        return len(x) == len(y) and all(_same(a, b) for a, b in zip(x, y))
    if isinstance(x, np.ndarray):
        return np.array_equal(x, y)
    return x == y


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("-n", type=int, default=200_000, help="rows per batch")
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)

    backends = kernels.backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the numpy fallback is available", file=sys.stderr)
    names = [b for b in ("python", "cython") if b in backends]
    print(f"n={args.n} repeat={args.repeat} default backend={kernels.BACKEND}")
    print(f"{'kernel':<22}" + "".join(f"{b:>12}" for b in names) + ("     speedup" if len(names) == 2 else ""))
    for label, fn in _cases(args.n, args.seed).items():
        results = {b: fn(backends[b]) for b in names}
        if len(names) == 2 and not _same(results["python"], results["cython"]):
            print(f"{label}: backends disagree", file=sys.stderr)
            return 1
        times = {b: min(timeit.repeat(lambda: fn(backends[b]), number=1, repeat=args.repeat)) for b in names}
        row = f"{label:<22}" + "".join(f"{times[b] * 1e3:>10.2f}ms" for b in names)
        if len(names) == 2:
            row += f"{times['python'] / times['cython']:>11.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
