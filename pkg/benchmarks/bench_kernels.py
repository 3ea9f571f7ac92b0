"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5]

Times the grid-evaluation kernel, the rebinning kernel and a full exhaustive
fit on Fig-1 scale data under each backend, and checks both backends return
identical results.
"""
import argparse
import timeit

import numpy as np

from plawbg import kernels
from plawbg.degree import degree_distribution
from plawbg.model import FitConfig, fit_perfect_power_law
from plawbg.synth import GeneratorSpec, sample_degrees


def cases():
    rng = np.random.default_rng(0)
    bins = np.unique(rng.integers(1, 10**6, size=32))
    scales = np.geomspace(1.0, 1e4, 64)
    obs = np.unique(rng.integers(1, 10**6, size=5000))
    cnt = rng.integers(1, 50, size=len(obs))
    dist = degree_distribution(sample_degrees(GeneratorSpec(n_samples=10_000, seed=1)).tolist())
    cfg = FitConfig(max_bins=32)
    return {
        "model_totals (32 bins x 64 scales)": lambda: kernels.model_totals(bins, 0.9, scales),
        "rebin_counts (5000 obs -> 32 bins)": lambda: kernels.rebin_counts(obs, cnt, bins),
        "exhaustive fit (10k samples, max_bins=32)": lambda: fit_perfect_power_law(dist, cfg),
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    try:
        kernels.use("cython")
    except ImportError:
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")

    results = {}
    print(f"{'case':45s} {'python':>12s} {'cython':>12s} {'speedup':>8s}")
    for name, fn in cases().items():
        times = {}
        for backend in ("python", "cython"):
            kernels.use(backend)
            n = 1
            while timeit.timeit(fn, number=n) < 0.2:
                n *= 2
            times[backend] = min(timeit.repeat(fn, number=n, repeat=args.repeat)) / n
            results[name, backend] = fn()
        py, cy = times["python"], times["cython"]
        print(f"{name:45s} {py * 1e3:10.3f}ms {cy * 1e3:10.3f}ms {py / cy:7.1f}x")
        a, b = results[name, "python"], results[name, "cython"]
        same = all((x == y).all() for x, y in zip(a, b)) if isinstance(a, tuple) and isinstance(a[0], np.ndarray) else (
            (a == b).all() if isinstance(a, np.ndarray) else a == b
        )
        assert same, f"backends disagree on {name}"


if __name__ == "__main__":
    main()
