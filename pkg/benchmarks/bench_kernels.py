"""Compare the compiled and pure-Python kernels on the two hot loops.

    python benchmarks/bench_kernels.py [--repeat 3]

Both backends are run on identical inputs and their outputs compared before
timings are reported.
"""

from __future__ import annotations

import argparse
import time

from skeindim import hecke, kernels
from skeindim.perm import perm_table


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def hecke_case(n: int):
    table = perm_table(n)
    x, _ = hecke._common_denominator(hecke.trivial_idempotent(n), table)
    y, _ = hecke._common_denominator(hecke.sign_idempotent((n,), n), table)
    return table, x, y


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not kernels.compiled_available():
        print("compiled kernels are not built; only the Python backend is available")
        return
    cases = [
        ("gcd histogram (Z/60)^3", lambda b: kernels.gcd_histogram(60, 3, backend=b)),
        ("gcd histogram (Z/100)^3", lambda b: kernels.gcd_histogram(100, 3, backend=b)),
    ]
    for n in (4, 5, 6):
        table, x, y = hecke_case(n)
        cases.append((f"Hecke product e+_{n} e-_{n}", lambda b, t=table, x=x, y=y: kernels.hecke_product(t, x, y, backend=b)))
    print(f"{'case':32} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, fn in cases:
        if fn("python") != fn("compiled"):
            raise SystemExit(f"backends disagree on {name}")
        tp = best_of(lambda: fn("python"), args.repeat)
        tc = best_of(lambda: fn("compiled"), args.repeat)
        print(f"{name:32} {tp:10.4f} {tc:11.4f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
