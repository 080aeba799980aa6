"""Benchmark the numba kernels against the pure-numpy fallback.

Usage: python benchmarks/bench_backends.py [--repeats N]

Times each hot kernel on a medium instance for both backends and prints the
speedup. The numba pass runs once untimed first so compilation is excluded.
"""

import argparse
import time

import numpy as np

import hyperalpha as ha
from hyperalpha import kernels
from hyperalpha.forms import form_table


def bench(fn, repeats):
    fn()  # warmup (and JIT compile on the numba path)
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    H = ha.nonuniform_random(40, {2: 1.0, 3: 2.0, 4: 2.0, 5: 1.0}, 120, seed=1)
    t = form_table(H)
    X = rng.uniform(0.0, 1.0, size=(2000, H.n))
    x = np.ascontiguousarray(X[0])
    x0 = x / np.sum(x ** t.m) ** (1.0 / t.m)
    x0[5] = 0.0

    iso_h = ha.nonuniform_random(20, {2: 1.0, 3: 1.0}, 30, seed=2)
    iso_masks = np.array([sum(1 << (v - 1) for v in e) for e in iso_h.edges],
                         dtype=np.int64)

    B = rng.normal(size=(150, 150))
    sym = (B + B.T) / 2

    dense_h = ha.build(10, [[1, 2, 3], [3, 4, 5], [5, 6, 7, 8], [8, 9, 10]])
    dense_t = form_table(dense_h)
    dense_x = rng.uniform(0.0, 1.0, size=10)

    cases = {
        "form_value_batch (2000 pts)": lambda k: k.form_value_batch(
            t.deg, t.m, t.sub_idx, t.sub_ptr, t.sub_coef,
            np.ascontiguousarray(X)),
        "form_grad (x100)": lambda k: [k.form_grad(
            t.deg, t.m, t.sub_idx, t.sub_ptr, t.sub_coef, x)
            for _ in range(100)],
        "descend (one run)": lambda k: k.descend(
            t.deg, t.m, t.sub_idx, t.sub_ptr, t.sub_coef, x0.copy(), 5,
            2000, 1e-10, 1.0, 0.5),
        "iso_sweep (n=20)": lambda k: k.iso_sweep(20, 10, iso_masks),
        "jacobi_eigvals (n=150)": lambda k: k.jacobi_eigvals(sym.copy()),
        "dense_contraction (10^4 tuples)": lambda k: k.dense_contraction(
            dense_x, dense_t.m, dense_t.deg, dense_t.edge_sizes,
            dense_t.edge_flat, dense_t.edge_ptr, dense_t.edge_coef),
    }

    backends = {name: kernels.get(name) for name in ("numpy", "numba")}
    width = max(len(name) for name in cases)
    print(f"{'kernel'.ljust(width)}  {'numpy':>12}  {'numba':>12}  {'speedup':>8}")
    for name, runner in cases.items():
        times = {}
        for bname, module in backends.items():
            times[bname] = bench(lambda: runner(module), args.repeats)
        speedup = times["numpy"] / times["numba"]
        print(f"{name.ljust(width)}  {times['numpy'] * 1e3:>10.3f}ms"
              f"  {times['numba'] * 1e3:>10.3f}ms  {speedup:>7.1f}x")


if __name__ == "__main__":
    main()
