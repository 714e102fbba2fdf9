"""Backend parity: the compiled kernels must match the pure ones."""

import os
import random
import subprocess
import sys

import pytest

from homcx._kernels import BACKEND, _pure

try:
    from homcx._kernels import _speedups
except ImportError:
    _speedups = None

needs_compiled = pytest.mark.skipif(
    _speedups is None, reason="compiled extension not built"
)


def random_sparse_columns(rng, m, n):
    cols = []
    for _ in range(n):
        rows = rng.sample(range(m), rng.randrange(0, m + 1))
        cols.append({r: rng.randrange(-5, 6) for r in rows})
    return cols


@needs_compiled
def test_snf_diagonal_agreement():
    rng = random.Random(31)
    for _ in range(400):
        m = rng.randrange(1, 7)
        n = rng.randrange(1, 7)
        cols = random_sparse_columns(rng, m, n)
        assert _speedups.snf_diagonal(cols, m) == _pure.snf_diagonal(cols, m)


@needs_compiled
def test_search_homs_agreement():
    rng = random.Random(32)
    for _ in range(150):
        n_t = rng.randrange(1, 5)
        n_g = rng.randrange(1, 6)
        next_adj = [
            sorted(set(rng.sample(range(i + 1, n_t), rng.randrange(0, n_t - i))))
            for i in range(n_t)
        ]
        t_loop = [rng.random() < 0.2 for _ in range(n_t)]
        g_adj = [rng.getrandbits(n_g) for _ in range(n_g)]
        # make adjacency symmetric as a bitmask relation
        for u in range(n_g):
            for v in range(n_g):
                if g_adj[u] >> v & 1:
                    g_adj[v] |= 1 << u
        loop_mask = 0
        for v in range(n_g):
            if g_adj[v] >> v & 1:
                loop_mask |= 1 << v
        args = (next_adj, t_loop, g_adj, loop_mask, n_g, 10_000)
        assert sorted(_speedups.search_homs(*args)) == sorted(
            _pure.search_homs(*args)
        )


@needs_compiled
def test_search_homs_cap_agreement():
    # both backends must report overflow identically
    next_adj = [[], [], []]
    g_adj = [7, 7, 7]
    args = (next_adj, [False] * 3, g_adj, 0, 3, 5)
    assert _speedups.search_homs(*args) is None
    assert _pure.search_homs(*args) is None


@needs_compiled
def test_reduce_chain_complex_agreement():
    from homcx.builders import complete_graph, cycle_graph
    from homcx.homology import cellular_chain_complex
    from homcx.homs import enumerate_cells

    for t, g in [
        (complete_graph(2), complete_graph(5)),
        (cycle_graph(4), complete_graph(3)),
        (cycle_graph(5), complete_graph(4)),
    ]:
        c = cellular_chain_complex(enumerate_cells(t, g))
        assert _speedups.reduce_chain_complex(
            c.ranks, c.boundaries
        ) == _pure.reduce_chain_complex(c.ranks, c.boundaries)


def test_pure_env_forces_fallback():
    env = dict(os.environ, HOMCX_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import homcx; print(homcx.BACKEND)"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert out.stdout.strip() == "pure"


def test_backend_reported():
    assert BACKEND in ("pure", "compiled")
