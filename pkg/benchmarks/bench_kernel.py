"""Benchmark the compiled search kernel against the pure-Python fallback.

Runs identical workloads through both implementations, checks that the
traces agree, and prints a timing table.

    python3 benchmarks/bench_kernel.py
"""

import time

from parikhgrid import _kernel_py as pure
from parikhgrid.search import _build_tables

try:
    from parikhgrid import _kernel as compiled
except ImportError:
    compiled = None

# label, kind, (k, sigma, length), extras
WORKLOADS = [
    ("perfect-cover enumeration (3,3) @ 12",
     "search", (3, 3, 12), dict(pdb_only=True, collect=0)),
    ("perfect-cover refutation (4,3) @ 18",
     "search", (4, 3, 18), dict(pdb_only=True, collect=0)),
    ("shortest-cover pass (3,4) @ 19",
     "search", (4, 3, 19), dict(pdb_only=False, collect=1)),
    ("shortest-cover pass (4,4) @ 38",
     "search", (4, 4, 38), dict(pdb_only=False, collect=1)),
    ("naive enumeration (4,2) @ 11",
     "naive", (2, 4, 11), {}),
]


def run(kernel_mod, kind, params, extras):
    k, sigma, length = params
    tables = _build_tables(k, sigma, True)
    start = time.perf_counter()
    if kind == "search":
        result = kernel_mod.fixed_length_search(
            k, sigma, length, tables, extras["pdb_only"], 15, (),
            extras["collect"], 10**9)
    else:
        result = kernel_mod.find_covering_naive(k, sigma, length, tables)
    return time.perf_counter() - start, result


def main():
    if compiled is None:
        print("compiled kernel not built; install with a C compiler to "
              "compare")
    print("%-42s %12s %12s %9s" % ("workload", "compiled", "pure", "speedup"))
    for label, kind, params, extras in WORKLOADS:
        t_pure, r_pure = run(pure, kind, params, extras)
        if compiled is None:
            print("%-42s %12s %10.3fs %9s" % (label, "-", t_pure, "-"))
            continue
        t_comp, r_comp = run(compiled, kind, params, extras)
        if r_comp != r_pure:
            raise SystemExit("kernel mismatch on %r" % label)
        print("%-42s %11.3fs %11.3fs %8.1fx"
              % (label, t_comp, t_pure, t_pure / t_comp if t_comp else 0.0))


if __name__ == "__main__":
    main()
