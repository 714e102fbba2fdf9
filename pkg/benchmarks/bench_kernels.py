"""Compare the compiled and pure-Python kernel backends.

Run directly: ``python benchmarks/bench_kernels.py``.  Each workload is
executed through both backends and checked for identical output.
"""

import time

from homcx._kernels import _pure

try:
    from homcx._kernels import _speedups
except ImportError:
    _speedups = None

from homcx.builders import (
    chi4_girth5_graph,
    complete_graph,
    cycle_graph,
    petersen_graph,
)
from homcx.homology import cellular_chain_complex
from homcx.homs import enumerate_cells


def _timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def bench_search(backend, t, g, cap=2_000_000):
    # mirror the argument marshalling done by enumerate_homs
    from homcx.homs import _bfs_order

    order = _bfs_order(t)
    pos = {v: i for i, v in enumerate(order)}
    next_adj = [[] for _ in order]
    t_loop = [False] * len(order)
    for u, v in t.edges:
        if u == v:
            t_loop[pos[u]] = True
        else:
            i, j = pos[u], pos[v]
            if i < j:
                next_adj[i].append(j)
            else:
                next_adj[j].append(i)
    g_loop_mask = 0
    for v in g.loops():
        g_loop_mask |= 1 << v
    g_adj = list(g.adjacency_masks)
    return backend.search_homs(next_adj, t_loop, g_adj, g_loop_mask, g.n, cap)


def bench_homology(backend, t, g):
    k = enumerate_cells(t, g)
    c = cellular_chain_complex(k)
    ranks, cols, b0 = backend.reduce_chain_complex(c.ranks, c.boundaries)
    return [backend.snf_diagonal(cols[d], ranks[d - 1]) for d in range(1, len(ranks))], b0


def main():
    workloads = [
        ("search C5 -> Petersen", bench_search, cycle_graph(5), petersen_graph()),
        ("search K3 -> chi4-girth5", bench_search, complete_graph(3), chi4_girth5_graph()),
        ("homology B(K6)", bench_homology, complete_graph(2), complete_graph(6)),
        ("homology Hom(C6, C6)", bench_homology, cycle_graph(6), cycle_graph(6)),
        ("homology B(chi4-girth5)", bench_homology, complete_graph(2), chi4_girth5_graph()),
        ("homology Hom(C5, K4)", bench_homology, cycle_graph(5), complete_graph(4)),
        ("homology B(K7)", bench_homology, complete_graph(2), complete_graph(7)),
    ]
    print(f"{'workload':<28} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn, t, g in workloads:
        pure_out, pure_dt = _timed(fn, _pure, t, g)
        if _speedups is None:
            print(f"{name:<28} {pure_dt:>9.3f}s {'n/a':>10}")
            continue
        fast_out, fast_dt = _timed(fn, _speedups, t, g)
        assert pure_out == fast_out, f"backend mismatch on {name}"
        ratio = pure_dt / fast_dt if fast_dt else float("inf")
        print(f"{name:<28} {pure_dt:>9.3f}s {fast_dt:>9.3f}s {ratio:>7.2f}x")


if __name__ == "__main__":
    main()
