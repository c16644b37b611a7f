"""Benchmark the hot kernels: pure Python against the compiled extension.

Both implementations are imported side by side, so the comparison runs
regardless of which backend the package selected at import time.  Each
measurement is the median of --repeats runs on fixed seeded inputs.

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --repeats 9 --p 2147483629
"""

import argparse
import random
import statistics
import time

from anumber._kernels import _pykernels

try:
    from anumber._kernels import _cykernels
except ImportError:
    _cykernels = None

CONVOLVE_SIZES = (256, 1024, 4096)
ROW_REDUCE_SIZES = (40, 80, 160)


def timed(fn, repeats):
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def bench_convolve(p, repeats, rng):
    rows = []
    for n in CONVOLVE_SIZES:
        a = [rng.randrange(p) for _ in range(n)]
        b = [rng.randrange(p) for _ in range(n)]
        py = timed(lambda: _pykernels.convolve_mod(a, b, p), repeats)
        cy = (timed(lambda: _cykernels.convolve_mod(a, b, p), repeats)
              if _cykernels else None)
        rows.append((f"convolve {n}x{n}", py, cy))
    return rows


def bench_row_reduce(p, repeats, rng):
    rows = []
    for n in ROW_REDUCE_SIZES:
        matrix = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        py = timed(
            lambda: _pykernels.row_reduce_mod([r[:] for r in matrix], p),
            repeats,
        )
        cy = (timed(
            lambda: _cykernels.row_reduce_mod([r[:] for r in matrix], p),
            repeats,
        ) if _cykernels else None)
        rows.append((f"row_reduce {n}x{n}", py, cy))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5,
                        help="runs per measurement, median reported")
    parser.add_argument("--p", type=int, default=1000003,
                        help="modulus (must stay below 2^31 for the "
                             "compiled kernels)")
    args = parser.parse_args()
    if _cykernels is None:
        print("note: compiled kernels not built; pure Python only\n")

    rng = random.Random(42)
    rows = bench_convolve(args.p, args.repeats, rng)
    rows += bench_row_reduce(args.p, args.repeats, rng)

    header = f"{'operation':<20} {'python':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, py, cy in rows:
        py_ms = f"{py * 1e3:8.2f}ms"
        if cy is None:
            print(f"{name:<20} {py_ms:>10} {'-':>10} {'-':>8}")
        else:
            cy_ms = f"{cy * 1e3:8.2f}ms"
            print(f"{name:<20} {py_ms:>10} {cy_ms:>10} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
