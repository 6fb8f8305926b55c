"""Time the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from ribboncat import kernels
from ribboncat.catalog import deligne_product, load_named


def cases():
    d4s3 = deligne_product(load_named("rep_d4"), load_named("rep_s3"))
    toric2 = deligne_product(load_named("toric_code"), load_named("toric_code"))
    yield "associativity rep_d4 x rep_s3 (rank 15)", "associativity_violation", (d4s3.N,)
    yield "associativity toric x toric (rank 16)", "associativity_violation", (toric2.N,)
    t = [i for i in range(16)]
    yield "extended hom toric x toric, 16 labels", "extended_hom_matrix", (toric2.N, t, [1] * 16)
    yield "gram 9*I_4 (all factorizations)", "gram_factorizations", (np.eye(4, dtype=np.int64) * 9, range(4), 10**6)
    M = np.array([[4, 2, 2], [2, 4, 2], [2, 2, 4]])
    yield "gram 3x3 dense (all factorizations)", "gram_factorizations", (M, range(3), 10**6)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    py = kernels.python_backend
    cy = kernels.compiled_backend
    if cy is None:
        print("compiled backend not available; only timing the Python kernels")
    print(f"{'case':48s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for label, fn, fargs in cases():
        t_py = min(timeit.repeat(lambda: getattr(py, fn)(*fargs), number=1, repeat=args.repeat)) * 1e3
        if cy is None:
            print(f"{label:48s} {t_py:10.3f}")
            continue
        assert getattr(py, fn)(*fargs).__repr__() == getattr(cy, fn)(*fargs).__repr__(), label
        t_cy = min(timeit.repeat(lambda: getattr(cy, fn)(*fargs), number=1, repeat=args.repeat)) * 1e3
        print(f"{label:48s} {t_py:10.3f} {t_cy:10.3f} {t_py / t_cy:7.1f}x")


if __name__ == "__main__":
    main()
