"""Compare the compiled and pure-Python enumeration kernels.

Runs the two production workloads — the 2^12 local-bound maximization and
the 2^17 noncontextual-valuation search — against both backends and prints
the timings.

Usage: python3 benchmarks/bench_kernels.py [repeats]
"""

import sys
import time

from avnlab import ks, lhv
from avnlab.functional import BellFunctional
from avnlab.kernels import _pure

try:
    from avnlab.kernels import _core
except ImportError:
    _core = None


def workloads():
    functional = BellFunctional.canonical()
    cs = lhv.constraints_for(functional)
    masks12, parities12 = cs.masks_and_parities()
    signs12 = [t.sign for t in functional.terms]

    table = ks.KsTable.canonical()
    cells = table.cells()
    index = {(r, c): i for i, (r, c, _) in enumerate(cells)}
    masks17, parities17 = [], []
    for kind, line_index, _, target in table.lines():
        mask = 0
        for (r, c), i in index.items():
            if (kind == "row" and r == line_index) or (
                kind == "column" and c == line_index
            ):
                mask |= 1 << i
        masks17.append(mask)
        parities17.append(0 if target == +1 else 1)

    return [
        ("local bound, 2^12 vertices",
         lambda backend: backend.max_weighted_parity(masks12, signs12, 12)),
        ("EPR search, 2^12 assignments",
         lambda backend: backend.satisfaction_histogram(masks12, parities12, 12)),
        ("KS search, 2^17 valuations",
         lambda backend: backend.satisfaction_histogram(masks17, parities17, 17)),
    ]


def best_of(fn, backend, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(backend)
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    backends = [("python", _pure)]
    if _core is not None:
        backends.insert(0, ("cython", _core))
    else:
        print("compiled kernels unavailable; timing the fallback only")

    print(f"{'workload':<32}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for label, fn in workloads():
        row = f"{label:<32}"
        timings = []
        results = []
        for _, backend in backends:
            elapsed, result = best_of(fn, backend, repeats)
            timings.append(elapsed)
            results.append(result)
            row += f"{elapsed * 1e3:>10.2f}ms"
        assert all(r == results[0] for r in results), "backends disagree"
        if len(timings) == 2:
            row += f"{timings[1] / timings[0]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
