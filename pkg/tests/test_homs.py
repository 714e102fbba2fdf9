"""Hom complexes: enumeration, cell maps, the Z_2 action."""

import itertools

import pytest

from homcx.builders import (
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
)
from homcx.errors import ResourceLimitError
from homcx.graphs import Graph, GraphHom
from homcx.homs import (
    Involution,
    enumerate_cells,
    enumerate_homs,
    pullback,
    pushforward,
    x_homotopy_classes,
    z2_structure,
)


def brute_homs(t, g):
    out = []
    for mapping in itertools.product(range(g.n), repeat=t.n):
        if all(g.has_edge(mapping[u], mapping[v]) for u, v in t.edges):
            out.append(mapping)
    return sorted(out)


@pytest.mark.parametrize(
    "t,g",
    [
        (complete_graph(2), cycle_graph(5)),
        (cycle_graph(4), complete_graph(3)),
        (cycle_graph(5), complete_graph(3)),
        (path_graph(3), cycle_graph(6)),
        (Graph(2, [(0, 0), (0, 1)]), Graph(3, [(0, 0), (0, 1), (1, 2)])),
    ],
)
def test_enumeration_matches_brute_force(t, g):
    homs = enumerate_homs(t, g)
    assert [h.mapping for h in homs] == [tuple(m) for m in brute_homs(t, g)]


def test_no_homs_odd_cycle_to_bipartite():
    assert enumerate_homs(cycle_graph(5), cycle_graph(6)) == []


def test_hom_cap_raises():
    with pytest.raises(ResourceLimitError):
        enumerate_homs(path_graph(4), complete_graph(5), cap=10)


def test_cells_sorted_by_dim_then_assignment():
    k = enumerate_cells(complete_graph(2), cycle_graph(5))
    keys = [(c.dim, c.assignment) for c in k.cells]
    assert keys == sorted(keys)


def test_cells_of_box_complex_c5():
    k = enumerate_cells(complete_graph(2), cycle_graph(5))
    # 10 homs and 10 edges between them
    assert k.cell_counts() == (10, 10)


def test_empty_source_graph():
    k = enumerate_cells(Graph(0, []), cycle_graph(5))
    assert len(k) == 1 and k.cells[0].assignment == ()


def test_facets_are_codim_one():
    k = enumerate_cells(cycle_graph(4), complete_graph(3))
    for i, cell in enumerate(k.cells):
        for j in k.facets(i):
            assert k.cells[j].dim == cell.dim - 1
            assert k.cells[j].is_face_of(cell)


def test_multihom_face_relation():
    k = enumerate_cells(complete_graph(2), complete_graph(3))
    tops = [c for c in k.cells if c.dim == k.dimension]
    for top in tops:
        faces = [c for c in k.cells if c.is_face_of(top) and c != top]
        # product of boolean intervals minus the cell itself
        sizes = [len(s) for s in top.assignment]
        expect = 1
        for size in sizes:
            expect *= 2 ** size - 1
        assert len(faces) == expect - 1


def test_pushforward_well_defined():
    c5 = cycle_graph(5)
    k3 = complete_graph(3)
    f = GraphHom(c5, k3, [0, 1, 2, 0, 1])
    pf = pushforward(f, complete_graph(2))
    assert pf.is_order_preserving()
    assert len(pf.images) == len(pf.source)


def test_pullback_along_involution_is_bijection():
    c5 = cycle_graph(5)
    k2 = complete_graph(2)
    swap = GraphHom(k2, k2, [1, 0])
    k = enumerate_cells(k2, c5)
    pb = pullback(swap, c5, source_complex=k, target_complex=k)
    assert sorted(pb.images) == list(range(len(k)))


def test_x_homotopy_petersen_is_rigid():
    classes = x_homotopy_classes(cycle_graph(5), petersen_graph())
    assert len(classes) == 120
    assert all(len(c) == 1 for c in classes)


def test_x_homotopy_collapses_to_one_class():
    # maps K_2 -> K_3 all connected through single-vertex moves
    classes = x_homotopy_classes(complete_graph(2), complete_graph(3))
    assert len(classes) == 1 and len(classes[0]) == 6


def test_involution_flipping_flag():
    k2 = complete_graph(2)
    swap = Involution(k2, GraphHom(k2, k2, [1, 0]))
    assert swap.flipping
    c5 = cycle_graph(5)
    refl = Involution(c5, GraphHom(c5, c5, [0, 4, 3, 2, 1]))
    assert refl.flipping  # 2 maps to its neighbor 3
    ident = Involution(c5, GraphHom.identity(c5))
    assert not ident.flipping


def test_z2_action_free_on_box_complex():
    k2 = complete_graph(2)
    swap = Involution(k2, GraphHom(k2, k2, [1, 0]))
    rep = z2_structure(k2, swap, cycle_graph(5))
    assert rep.flipping and rep.free
    assert rep.fixed_cells == 0
    assert rep.order_preserving and rep.dimension_preserving


def test_z2_action_not_free_without_flip():
    c4 = cycle_graph(4)
    rot = Involution(c4, GraphHom(c4, c4, [2, 3, 0, 1]))
    rep = z2_structure(c4, rot, complete_graph(3))
    # the antipodal rotation of C_4 is not flipping and fixes cells
    assert not rep.flipping
    assert not rep.free
