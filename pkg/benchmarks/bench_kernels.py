#!/usr/bin/env python3
"""Benchmark the packed-word kernel against the pure-Python fallback.

Times the join-meet matrix product on the shapes that dominate real runs
(small dense matrices over up-to-64-atom algebras) plus one wide-algebra
case that only the pure path can serve.

Usage: python benchmarks/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import random
import time

from boolmat import make_algebra
from boolmat import rand as br
from boolmat._kernel import pure

try:
    from boolmat._kernel import _packed
except ImportError:
    _packed = None


def time_backend(fn, n: int, a, b, repeats: int) -> float:
    start = time.perf_counter()
    for _ in range(repeats):
        fn(n, n, n, a, b)
    return time.perf_counter() - start


def bench_case(n: int, k: int, repeats: int) -> None:
    alg = make_algebra([str(i) for i in range(1, k + 1)])
    rng = random.Random(n * 1000 + k)
    a = br.random_stochastic_matrix(rng, alg, n).masks
    b = br.random_stochastic_matrix(rng, alg, n).masks

    pure_s = time_backend(pure.matmul, n, a, b, repeats)
    line = f"{n}x{n}, {k:3d} atoms: pure {repeats / pure_s:>12,.0f} products/s"
    if _packed is not None and k <= 64:
        packed_s = time_backend(_packed.matmul, n, a, b, repeats)
        assert _packed.matmul(n, n, n, a, b) == pure.matmul(n, n, n, a, b)
        line += f" | packed {repeats / packed_s:>12,.0f} products/s | speedup {pure_s / packed_s:5.1f}x"
    elif k > 64:
        line += " | packed n/a (mask wider than one word)"
    else:
        line += " | packed n/a (extension not built)"
    print(line)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=20000, help="products per case")
    args = parser.parse_args()

    print(f"compiled extension available: {_packed is not None}")
    for n, k in ((2, 3), (4, 16), (8, 64), (16, 64), (8, 96)):
        bench_case(n, k, args.repeats)


if __name__ == "__main__":
    main()
