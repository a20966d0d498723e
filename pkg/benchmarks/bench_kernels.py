"""Time the compiled and pure-Python kernel backends on the same workloads.

    python3 benchmarks/bench_kernels.py [--repeat N] [--quick]
"""

from __future__ import annotations

import argparse
import random
import timeit

from wmp import kernels
from wmp.enumerate import graphs_of_order
from wmp.expr import parse_expr
from wmp.graph import build, cycle
from wmp.kozen import iso_via_product, max_clique
from wmp.perfection import is_perfect_oracle
from wmp.products import wmp
from wmp.sweep import run_sweep


def _random(rng, n, p):
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def workloads(quick: bool):
    rng = random.Random(0)
    dense = [_random(rng, 64, 0.75) for _ in range(3 if quick else 10)]
    products = [wmp(cycle(5), cycle(5)), wmp(parse_expr("P4"), parse_expr("K2,2")),
                wmp(parse_expr("cricket"), parse_expr("P3")), wmp(cycle(6), cycle(6)), wmp(cycle(7), cycle(6))]
    pairs = [(cycle(8), cycle(8)), (parse_expr("C4+C4"), cycle(8)), (parse_expr("K2,2+P4"), parse_expr("C4+P4"))]
    sweep_n = 3 if quick else 5
    return {
        # cleared so neither backend inherits the other's enumeration
        "sweep": lambda: (graphs_of_order.cache_clear(), run_sweep(sweep_n, jobs=1)),
        "max clique": lambda: [max_clique(g) for g in dense],
        "odd hole": lambda: [is_perfect_oracle(g) for g in products],
        "iso via product": lambda: [iso_via_product(g, h) for g, h in pairs],
        "enumerate n=6": lambda: (graphs_of_order.cache_clear(), graphs_of_order(6)),
    }


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    print(f"{'workload':<16}" + "".join(f"{b:>12}" for b in backends) + ("   speedup" if len(backends) > 1 else ""))
    for name, fn in workloads(args.quick).items():
        best = {}
        for b in backends:
            previous = kernels.use_backend(b)
            try:
                best[b] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
            finally:
                kernels.use_backend(previous)
        row = f"{name:<16}" + "".join(f"{best[b]:>11.4f}s" for b in backends)
        if len(backends) > 1:
            row += f"{best['python'] / best['cython']:>9.1f}x"
        print(row)
    graphs_of_order.cache_clear()


if __name__ == "__main__":
    main()
