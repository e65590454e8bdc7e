"""Benchmark the compiled LP core against the pure-Python fallback.

Run: python3 benchmarks/bench_lp.py [n_problems]
"""

import sys
import time

import numpy as np


def _problems(n, seed=12345):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        m = int(rng.integers(6, 40))
        A = rng.normal(size=(m, 3))
        x0 = rng.normal(size=3)
        b = A @ x0 + rng.uniform(0.1, 2.0, size=m)
        c = rng.normal(size=3)
        out.append((A, b, c))
    return out


def _run(solver, problems):
    t0 = time.perf_counter()
    results = [solver(A, b, c, 7) for A, b, c in problems]
    return time.perf_counter() - t0, results


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
    problems = _problems(n)
    from gaugediam import _seidel_py
    backends = [("pure-python", _seidel_py.seidel_solve)]
    try:
        from gaugediam import _seidel
        backends.insert(0, ("compiled", _seidel.seidel_solve))
    except ImportError:
        print("compiled backend unavailable; benchmarking fallback only")
    timings = {}
    results = {}
    for name, solver in backends:
        dt, res = _run(solver, problems)
        timings[name] = dt
        results[name] = res
        print("%-12s %8.1f us/solve  (%d problems in %.3fs)"
              % (name, 1e6 * dt / n, n, dt))
    if len(backends) == 2:
        print("speedup: %.1fx" % (timings["pure-python"] / timings["compiled"]))
        mismatch = 0
        for (st1, x1), (st2, x2) in zip(results["compiled"],
                                        results["pure-python"]):
            if st1 != st2:
                mismatch += 1
            elif st1 == 0 and max(abs(a - b) for a, b in zip(x1, x2)) > 1e-7:
                mismatch += 1
        print("agreement: %d/%d identical" % (n - mismatch, n))


if __name__ == "__main__":
    main()
