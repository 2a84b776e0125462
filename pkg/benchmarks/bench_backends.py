"""Wall-clock comparison of the compiled and pure-numpy kernel backends.

Run with:

    python3 benchmarks/bench_backends.py [--repeats 3]

Each kernel gets one untimed warm-up call before measurement, so JIT
compilation does not count against the compiled backend; the reported
figure is the best of the repeated runs.
"""

import argparse
import time

from zetalab.backends import numpy_impl

try:
    from zetalab.backends import numba_impl
except ImportError:
    numba_impl = None

SIGMA = 0.5
T = 14.134725

CASES = [
    (
        "eta_advance, 1e6 terms",
        lambda impl: impl.eta_advance(SIGMA, T, 0, 1_000_000, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
    ),
    (
        "power_advance, 1e7 terms",
        lambda impl: impl.power_advance(2.0 * SIGMA, 0, 10_000_000, 0.0, 0.0),
    ),
    (
        "cross_term_pairs, n=4000",
        lambda impl: impl.cross_term_pairs(SIGMA, T, 4000),
    ),
    (
        "cvz_eta, order 200",
        lambda impl: impl.cvz_eta(SIGMA, T, 200),
    ),
]


def best_of(repeats: int, call) -> float:
    call()  # warm-up; also triggers compilation on the numba side
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        call()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    impls = [("numpy", numpy_impl)]
    if numba_impl is not None:
        impls.insert(0, ("numba", numba_impl))
    else:
        print("numba backend unavailable; timing the numpy backend only")

    width = max(len(name) for name, _ in CASES)
    header = f"{'kernel':<{width}}" + "".join(f"  {name:>10}" for name, _ in impls)
    if len(impls) == 2:
        header += f"  {'numpy/numba':>11}"
    print(header)
    print("-" * len(header))
    for case_name, call in CASES:
        times = [best_of(args.repeats, lambda impl=impl: call(impl)) for _, impl in impls]
        line = f"{case_name:<{width}}" + "".join(f"  {seconds:>9.4f}s" for seconds in times)
        if len(times) == 2:
            line += f"  {times[1] / times[0]:>10.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
