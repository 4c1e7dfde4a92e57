"""Compare the compiled core with the pure-Python fallback.

    python benchmarks/bench_engine.py --side 50 --edges 1000 --epsilon 0.3

Both backends replay the same stream; the script checks that they end in
the same state before reporting timings.
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from wedcs._backend import core
from wedcs.hk import hopcroft_karp_py
from wedcs.maintainer import WedcsParams
from wedcs.pipeline import DynamicMatcher
from wedcs.streams import random_bipartite


def replay(backend: str, header, events, params) -> tuple[float, DynamicMatcher]:
    t0 = time.perf_counter()
    dm = DynamicMatcher(header.n, params, header.n_left, backend=backend)
    for ev in events:
        dm.insert_edge(ev.u, ev.v)
    return time.perf_counter() - t0, dm


def time_hk(fn, repeats: int) -> float:
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--side", type=int, default=50)
    ap.add_argument("--edges", type=int, default=1000)
    ap.add_argument("--epsilon", default="0.3")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--hk-side", type=int, default=20000, help="side of the sparse HK workload")
    ap.add_argument("--hk-degree", type=int, default=3)
    args = ap.parse_args(argv)
    if core is None:
        print("compiled core not available; only the Python backend can run")
        return 1

    header, events = random_bipartite(args.side, args.side, args.edges, args.seed)
    params = WedcsParams.from_epsilon(args.epsilon)
    print(f"stream: {args.side}x{args.side}, {args.edges} insertions, "
          f"epsilon={args.epsilon}, beta={params.beta}")

    results = {}
    for backend in ("python", "cython"):
        best = min(replay(backend, header, events, params)[0] for _ in range(args.repeats))
        results[backend] = best
    _, a = replay("python", header, events, params)
    _, b = replay("cython", header, events, params)
    assert a.wedcs.h_edges() == b.wedcs.h_edges()
    assert a.wedcs.counters() == b.wedcs.counters()
    updates = b.wedcs.counters().h_updates
    print(f"maintainer ({updates} H-updates):")
    for name, secs in results.items():
        print(f"  {name:<7} {secs * 1e3:9.2f} ms")
    print(f"  speedup {results['python'] / results['cython']:.1f}x")

    # dense streams are matched almost greedily; a sparse graph needs real phases
    rng = random.Random(args.seed)
    k = args.hk_side
    adj = [sorted(rng.sample(range(k), args.hk_degree)) for _ in range(k)]
    py = time_hk(lambda: hopcroft_karp_py(adj, k), args.repeats)
    cy = time_hk(lambda: core.hopcroft_karp(adj, k, -1), args.repeats)
    assert list(core.hopcroft_karp(adj, k, -1)) == hopcroft_karp_py(adj, k)
    print(f"hopcroft-karp, {k}x{k} with left degree {args.hk_degree}:")
    print(f"  python  {py * 1e3:9.2f} ms")
    print(f"  cython  {cy * 1e3:9.2f} ms")
    print(f"  speedup {py / cy:.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
