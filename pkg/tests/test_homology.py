"""Integer homology: chain complexes, SNF, reduction, induced maps."""

import random

import pytest

from homcx.builders import (
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    walker_graph_1,
    walker_graph_2,
)
from homcx.errors import ResourceLimitError
from homcx.graphs import Graph, GraphHom
from homcx.homology import (
    ChainComplex,
    HomologyProfile,
    cellular_chain_complex,
    homology,
    induced_map_homology,
    order_complex_homology,
)
from homcx.homs import enumerate_cells, pushforward


def profile(t, g):
    return homology(cellular_chain_complex(enumerate_cells(t, g)))


def test_sphere_profiles_box_of_complete_graphs():
    # Hom(K_2, K_n) carries the homology of S^{n-2}
    assert profile(complete_graph(2), complete_graph(2)).betti == (2,)
    assert profile(complete_graph(2), complete_graph(3)).betti == (1, 1)
    assert profile(complete_graph(2), complete_graph(4)).betti == (1, 0, 1)
    assert profile(complete_graph(2), complete_graph(5)).betti == (1, 0, 0, 1)


def test_no_torsion_in_sphere_profiles():
    for n in (2, 3, 4, 5):
        p = profile(complete_graph(2), complete_graph(n))
        assert all(t == () for t in p.torsion)


def test_box_complex_of_cycles():
    assert profile(complete_graph(2), cycle_graph(5)).betti == (1, 1)
    assert profile(complete_graph(2), cycle_graph(4)).betti == (2,)
    assert profile(complete_graph(2), cycle_graph(6)).betti == (2, 2)


def test_torsion_detected():
    # Hom(C_5, K_4) has the integral homology of RP^3
    p = profile(cycle_graph(5), complete_graph(4))
    assert p.betti == (1, 0, 0, 1)
    assert p.torsion == ((), (2,), (), ())


def test_walker_pair_equal_betti():
    p1 = profile(complete_graph(2), walker_graph_1())
    p2 = profile(complete_graph(2), walker_graph_2())
    assert p1 == p2
    assert p1.betti == (1, 5)


def test_profile_json_round_trip():
    p = profile(cycle_graph(5), complete_graph(4))
    assert HomologyProfile.from_json_obj(p.to_json_obj()) == p


def test_dd_zero_enforced():
    with pytest.raises(AssertionError):
        ChainComplex([1, 1, 1], [[{}], [{0: 1}], [{0: 1}]])


def test_chain_complex_euler_characteristic():
    k = enumerate_cells(complete_graph(2), cycle_graph(5))
    c = cellular_chain_complex(k)
    assert c.euler_characteristic() == 0


def random_graph(rng, n, p):
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def test_cellular_matches_order_complex_on_random_instances():
    rng = random.Random(11)
    sources = [complete_graph(2), path_graph(3), cycle_graph(4)]
    done = 0
    while done < 12:
        g = random_graph(rng, rng.randrange(3, 7), 0.5)
        t = sources[done % len(sources)]
        k = enumerate_cells(t, g)
        if len(k) == 0 or len(k) > 2000:
            continue
        try:
            po = order_complex_homology(k)
        except ResourceLimitError:
            # barycentric subdivision too large for this instance
            continue
        pc = homology(cellular_chain_complex(k))
        assert pc == po
        done += 1


def test_reduction_preserves_homology_on_random_complexes():
    # compare full SNF on the raw complex against the reduced route
    from homcx._kernels import reduce_chain_complex, snf_diagonal

    rng = random.Random(5)
    for _ in range(25):
        g = random_graph(rng, rng.randrange(3, 7), 0.6)
        k = enumerate_cells(complete_graph(2), g)
        if len(k) == 0:
            continue
        c = cellular_chain_complex(k)
        # raw Betti from ranks without reduction
        raw = []
        dims = len(c.ranks)
        ranks_of_d = [len(snf_diagonal(c.boundaries[d], c.ranks[d - 1])) if d else 0 for d in range(dims)]
        for d in range(dims):
            upper = ranks_of_d[d + 1] if d + 1 < dims else 0
            raw.append(c.ranks[d] - ranks_of_d[d] - upper)
        betti = list(homology(c).betti)
        width = max(len(betti), len(raw))
        assert betti + [0] * (width - len(betti)) == raw + [0] * (width - len(raw))


def test_induced_map_identity_is_isomorphism():
    c5 = cycle_graph(5)
    ident = GraphHom.identity(c5)
    pf = pushforward(ident, complete_graph(2))
    report = induced_map_homology(pf)
    assert report.isomorphism
    assert report.source_profile == report.target_profile


def test_induced_map_to_point_kills_top_class():
    # collapse C_6 onto one edge: H_1 of the box complex must die
    c6 = cycle_graph(6)
    k2 = complete_graph(2)
    fold = GraphHom(c6, k2, [0, 1, 0, 1, 0, 1])
    pf = pushforward(fold, complete_graph(2))
    report = induced_map_homology(pf)
    assert not report.isomorphism
