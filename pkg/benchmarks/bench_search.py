"""Compare the compiled and numpy subset-search kernels.

Code tables are built once per instance; only the subset search is timed.
Workloads:

* ``fcs``: refute all 2-subsets of FCS(a, b, c) and find the first
  resolving 3-subset, in vertex and edge mode;
* ``random``: refute every 3-subset of a sparse random connected graph
  whose metric dimension exceeds 3 (a fully exhaustive scan).

Both kernels must return the same witness and the same counters.

    python benchmarks/bench_search.py --repeat 3
"""

import argparse
import random
import time

from fcsdim import _backend
from fcsdim.generators import FcsParams, build_fcs
from fcsdim.graph import build_graph, is_connected
from fcsdim.resolvability import MODES, _search_size, code_table


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def _random_graph(n, p, seed):
    rng = random.Random(seed)
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = build_graph(n, edges)
        if is_connected(g):
            return g


def _workloads(sizes, random_n):
    for spec in sizes:
        params = FcsParams(*map(int, spec.split(",")))
        g = build_fcs(params).graph
        for mode in MODES:
            yield f"FCS{params}", mode, code_table(g, None, mode), (1, 2, 3)
    g = _random_graph(random_n, 4.0 / random_n, seed=7)
    for mode in MODES:
        yield f"G({random_n})", mode, code_table(g, None, mode), (3,)


def run(table, sizes, backend, prune, threads):
    search = _backend.kernel(backend)
    out = []
    for s in sizes:
        out.append(_search_size(search, table, s, prune, threads))
        if out[-1][0] is not None:
            break
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", nargs="+", default=["4,4,4", "5,5,5", "6,6,6"])
    ap.add_argument("--random-n", type=int, default=70)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--no-prune", action="store_true")
    args = ap.parse_args()
    prune = not args.no_prune

    backends = _backend.available()
    print(f"backends: {', '.join(backends)}  threads={args.threads}  prune={prune}")
    print(f"{'instance':14s} {'mode':6s} {'subsets':>9s} " + " ".join(f"{b:>10s}" for b in backends)
          + "   speedup  agree")
    for name, mode, table, sizes in _workloads(args.sizes, args.random_n):
        times, results = [], []
        for b in backends:
            t, r = _time(lambda: run(table, sizes, b, prune, args.threads), args.repeat)
            times.append(t)
            results.append(r)
        agree = all(r == results[0] for r in results)
        visited = sum(c + p for _, c, p in results[0])
        speed = f"{times[-1] / times[0]:8.1f}x" if len(times) > 1 else "       -"
        print(f"{name:14s} {mode:6s} {visited:9d} " + " ".join(f"{t * 1e3:8.1f}ms" for t in times)
              + f"  {speed}  {agree}")


if __name__ == "__main__":
    main()
