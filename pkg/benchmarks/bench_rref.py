#!/usr/bin/env python3
"""Benchmark the compiled row-reduction kernel against the pure-Python twin.

Two views: the raw integer Gauss-Jordan kernel on synthetic matrices, and the
end-to-end filtration verifier with the active kernel swapped underneath.

    python benchmarks/bench_rref.py [--reps N]
"""

from __future__ import annotations

import argparse
import time
from random import Random

from lagsel import _rref_py
from lagsel import linalg
from lagsel.sampling import random_flag, random_skew_form
from lagsel.schubert import verify_filtration_lemmas

try:
    from lagsel import _rref as _rref_c
except ImportError:
    _rref_c = None


def random_cases(rng: Random, count: int, rows: int, cols: int, bound: int):
    return [
        [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]
        for _ in range(count)
    ]


def time_kernel(kernel, cases) -> float:
    start = time.perf_counter()
    for case in cases:
        kernel([row[:] for row in case])
    return time.perf_counter() - start


def bench_raw_kernel(reps: int) -> None:
    rng = Random(1)
    workloads = [
        ("7x14, entries <= 9 (filtration-sized)", random_cases(rng, 4 * reps, 7, 14, 9)),
        ("30x60, entries <= 9", random_cases(rng, max(1, reps // 10), 30, 60, 9)),
        ("12x24, entries <= 10^6 (coefficient growth)", random_cases(rng, reps, 12, 24, 10**6)),
    ]
    print("raw integer kernel")
    for label, cases in workloads:
        t_py = time_kernel(_rref_py.rref_int_rows, cases)
        line = f"  {label}: python {t_py * 1000:8.1f} ms"
        if _rref_c is not None:
            t_c = time_kernel(_rref_c.rref_int_rows, cases)
            line += f"   compiled {t_c * 1000:8.1f} ms   speedup {t_py / t_c:4.2f}x"
        print(line)


def bench_filtration(trials: int) -> None:
    rng = Random(2)
    inputs = []
    for _ in range(trials):
        m = rng.randint(2, 7)
        inputs.append((random_skew_form(rng, m), random_flag(rng, m)))

    def run() -> float:
        start = time.perf_counter()
        for form, flag in inputs:
            report = verify_filtration_lemmas(form, flag)
            assert report.ok
        return time.perf_counter() - start

    print(f"end-to-end filtration verifier ({trials} forms)")
    active = linalg._rref_int_rows
    try:
        linalg._rref_int_rows = _rref_py.rref_int_rows
        t_py = run()
        line = f"  python {t_py * 1000:8.1f} ms"
        if _rref_c is not None:
            linalg._rref_int_rows = _rref_c.rref_int_rows
            t_c = run()
            line += f"   compiled {t_c * 1000:8.1f} ms   speedup {t_py / t_c:4.2f}x"
        print(line)
    finally:
        linalg._rref_int_rows = active


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--reps", type=int, default=200, help="base repetition count")
    args = parser.parse_args()
    if _rref_c is None:
        print("compiled kernel not built; timing the pure backend only")
    bench_raw_kernel(args.reps)
    bench_filtration(max(10, args.reps // 4))


if __name__ == "__main__":
    main()
