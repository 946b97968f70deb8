"""Compare the compiled row-reduction kernel against the pure-python one.

Times the raw RREF kernel on dense random matrices and the full
decompose-plus-verify pipeline on a scrambled dim-64 direct sum, once per
available backend.

Usage: python3 benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import random
import time

import numpy as np

from wedderburn import (
    available_backends,
    build_planted,
    full_isomorphism,
    get_backend,
    scramble,
    set_backend,
    verify_isomorphism,
)
from wedderburn.linalg import rref


def time_call(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_rref(repeat):
    rng = random.Random(0)
    p = 97
    sizes = [(64, 64), (256, 256), (512, 512)]
    mats = {
        size: np.array(
            [[rng.randrange(p) for _ in range(size[1])] for _ in range(size[0])]
        )
        for size in sizes
    }
    rows = []
    for size in sizes:
        M = mats[size]
        rows.append((f"rref {size[0]}x{size[1]} mod {p}",
                     time_call(lambda: rref(M, p), repeat)))
    return rows


def bench_pipeline(repeat):
    A, _ = scramble(build_planted([(4, 1), (4, 1), (4, 2)], 97).algebra, seed=11)

    def run():
        res = full_isomorphism(A, seed=0)
        assert verify_isomorphism(A, res).passed

    return [("decompose+verify dim-64 over F_97", time_call(run, repeat))]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="take the best of N timings (default 3)")
    args = parser.parse_args()

    results = {}
    for name in available_backends():
        set_backend(name)
        assert get_backend() == name
        results[name] = bench_rref(args.repeat) + bench_pipeline(args.repeat)

    labels = [label for label, _ in next(iter(results.values()))]
    width = max(len(label) for label in labels)
    header = f"{'benchmark':<{width}}" + "".join(
        f"  {name:>10}" for name in results
    )
    print(header)
    print("-" * len(header))
    for i, label in enumerate(labels):
        cells = "".join(f"  {results[name][i][1]*1000:>8.1f}ms" for name in results)
        print(f"{label:<{width}}{cells}")
    if len(results) > 1:
        names = list(results)
        print()
        for i, label in enumerate(labels):
            base = results[names[0]][i][1]
            other = results[names[1]][i][1]
            faster = names[0] if base < other else names[1]
            ratio = max(base, other) / max(min(base, other), 1e-9)
            print(f"{label}: {faster} is {ratio:.1f}x faster")


if __name__ == "__main__":
    main()
