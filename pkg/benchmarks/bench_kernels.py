"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from quadbif import _fallback
from quadbif.map_core import escape_threshold, fixed_points, seed_initial_condition

try:
    from quadbif import _kernels
except ImportError:
    _kernels = None


def workloads(mod):
    a = 1.9
    bound = escape_threshold(a)
    seed = seed_initial_condition(a)
    x_star = fixed_points(a).x_plus
    return {
        "orbit 10^5 steps": lambda: mod.orbit_double(a, 0.2, 100_000, bound),
        "column T=1000 K=100 x 200": lambda: [
            mod.column_double(1.0 + i / 200, 0.2, 1000, 100, 3.0) for i in range(200)
        ],
        "divergence n=10^5, wide ball": lambda: mod.divergence_double(a, seed, x_star, 10.0, 100_000),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = [("python", _fallback)]
    if _kernels is not None:
        backends.insert(0, ("cython", _kernels))
    else:
        print("compiled extension not built; timing fallback only")
    timings = {}
    for name, mod in backends:
        for label, fn in workloads(mod).items():
            timings[label, name] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
    print(f"{'workload':32} {'cython':>10} {'python':>10} {'speedup':>8}")
    for label in workloads(_fallback):
        py = timings[label, "python"]
        cy = timings.get((label, "cython"))
        if cy is None:
            print(f"{label:32} {'-':>10} {py * 1e3:9.2f}ms {'-':>8}")
        else:
            print(f"{label:32} {cy * 1e3:9.2f}ms {py * 1e3:9.2f}ms {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
