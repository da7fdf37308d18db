"""Compare the numba and numpy Lasso path kernels.

    python3 benchmarks/bench_kernels.py [--n 5000] [--p 80] [--repeat 5]

Both kernels solve the same warm-started 100-point path; the script checks
that their coefficients agree and prints median wall time per path.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from paneldml import _kernels


def problem(n: int, p: int, seed: int = 0):
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(n, p))
    X[:, 1::2] += 0.7 * X[:, ::2][:, : X[:, 1::2].shape[1]]  # correlated pairs
    beta = np.zeros(p)
    beta[: max(1, p // 8)] = rng.normal(size=max(1, p // 8))
    y = X @ beta + rng.normal(size=n)
    Xs = (X - X.mean(0)) / X.std(0)
    yc = y - y.mean()
    G, q = Xs.T @ Xs / n, Xs.T @ yc / n
    lam_max = np.abs(q).max()
    return G, q, lam_max * np.logspace(0, -4, 100)


def timed(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return float(np.median(times))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=5000)
    ap.add_argument("--p", type=int, default=80)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    G, q, lams = problem(args.n, args.p)
    beta0 = np.zeros(args.p)
    run_np = lambda: _kernels.lasso_path_gram_numpy(G, q, lams, beta0, 1e-7, 100_000)
    results = {"numpy": (run_np, timed(run_np, args.repeat))}
    if _kernels.numba is not None:
        run_nb = lambda: _kernels.lasso_path_gram_numba(G, q, lams, beta0, 1e-7, 100_000)
        run_nb()  # compile
        results["numba"] = (run_nb, timed(run_nb, args.repeat))
        diff = np.abs(run_np()[0] - run_nb()[0]).max()
        print(f"max |coef difference| numpy vs numba: {diff:.2e}")
    else:
        print("numba not importable; timing numpy only")
    print(f"path of {len(lams)} penalties, p={args.p}")
    for name, (_, t) in results.items():
        print(f"{name:>6}: {1e3 * t:9.2f} ms")
    if "numba" in results:
        print(f"speedup: {results['numpy'][1] / results['numba'][1]:.1f}x")


if __name__ == "__main__":
    main()
