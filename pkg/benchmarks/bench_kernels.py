"""Benchmark the compiled kernels against the NumPy fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time
import warnings

import numpy as np

from tracecodes import kernels
from tracecodes.charsums import lemma_sweep
from tracecodes.codes import build_family_code
from tracecodes.field import make_field


def time_call(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_weight_counts(repeat: int) -> None:
    cases = [("D1", 3, 3, 1), ("D2", 3, 2, None), ("D2", 5, 2, None)]
    print(f"{'weight_counts':<28}{'pure':>12}{'fast':>12}{'speedup':>10}")
    for family, p, m, e in cases:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            gen = build_family_code(family, p, m, e).gen
        times = {}
        for name in kernels.available_backends():
            kern = kernels.get_backend(name)
            times[name] = time_call(lambda: kern.weight_counts(gen, p), repeat)
        label = f"{family}({p},{m}{',' + str(e) if e else ''}) {gen.shape}"
        ratio = times["pure"] / times["fast"] if "fast" in times else float("nan")
        print(f"{label:<28}{times['pure']:>11.4f}s{times.get('fast', float('nan')):>11.4f}s"
              f"{ratio:>9.1f}x")


def bench_char_histograms(repeat: int) -> None:
    rng = np.random.default_rng(0)
    print(f"\n{'char_histograms':<28}{'pure':>12}{'fast':>12}{'speedup':>10}")
    for p, L in ((3, 728), (5, 3124), (3, 6560)):
        base = rng.integers(0, p, size=L, dtype=np.int64)
        rot = rng.integers(0, p, size=L, dtype=np.int64)
        times = {}
        for name in kernels.available_backends():
            kern = kernels.get_backend(name)
            times[name] = time_call(lambda: kern.char_histograms(base, rot, p), repeat)
        ratio = times["pure"] / times["fast"] if "fast" in times else float("nan")
        print(f"p={p}, L={L:<18}{times['pure']:>11.4f}s"
              f"{times.get('fast', float('nan')):>11.4f}s{ratio:>9.1f}x")


def bench_sweep(repeat: int) -> None:
    print(f"\n{'lemma_sweep':<28}{'pure':>12}{'fast':>12}{'speedup':>10}")
    field = make_field(3, 6)
    times = {}
    for name in kernels.available_backends():
        times[name] = time_call(lambda: lemma_sweep(field, 1, backend=name), repeat)
    ratio = times["pure"] / times["fast"] if "fast" in times else float("nan")
    print(f"{'(3,3,1) full beta sweep':<28}{times['pure']:>11.4f}s"
          f"{times.get('fast', float('nan')):>11.4f}s{ratio:>9.1f}x")


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    print(f"available backends: {kernels.available_backends()}")
    print(f"active backend: {kernels.BACKEND}\n")
    bench_weight_counts(args.repeat)
    bench_char_histograms(args.repeat)
    bench_sweep(args.repeat)


if __name__ == "__main__":
    main()
