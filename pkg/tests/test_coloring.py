"""Exact chromatic number solver and helpers."""

import math

import pytest

from homcx.builders import (
    chi4_girth5_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    walker_graph_1,
    walker_graph_2,
)
from homcx.coloring import (
    chromatic_number,
    coloring_hom,
    greedy_clique,
    greedy_coloring,
)
from homcx.errors import ResourceLimitError
from homcx.graphs import Graph


def test_small_exact_values():
    assert chromatic_number(Graph(0, [])) == 0
    assert chromatic_number(Graph(3, [])) == 1
    assert chromatic_number(path_graph(5)) == 2
    assert chromatic_number(cycle_graph(6)) == 2
    assert chromatic_number(cycle_graph(7)) == 3
    assert chromatic_number(complete_graph(6)) == 6
    assert chromatic_number(petersen_graph()) == 3


def test_loop_means_uncolorable():
    assert chromatic_number(Graph(2, [(0, 0), (0, 1)])) == math.inf


def test_library_graph_is_chi4_girth5():
    g = chi4_girth5_graph()
    assert chromatic_number(g) == 4


def test_walker_pair_chromatic_numbers():
    assert chromatic_number(walker_graph_1()) == 4
    assert chromatic_number(walker_graph_2()) == 3


def test_greedy_coloring_proper():
    g = petersen_graph()
    colors = greedy_coloring(g)
    for u, v in g.edges:
        assert colors[u] != colors[v]


def test_greedy_clique_is_clique():
    g = complete_graph(5)
    clique = greedy_clique(g)
    assert len(clique) == 5


def test_coloring_hom_round_trip():
    g = cycle_graph(5)
    k = chromatic_number(g)
    colors = greedy_coloring(g)
    hom = coloring_hom(g, colors, max(colors) + 1)
    assert hom.domain == g
    assert k == 3


def test_order_hint_agrees_with_default():
    g = chi4_girth5_graph()
    hint = list(range(g.n))
    assert chromatic_number(g, order_hint=hint) == 4


def test_node_budget_enforced():
    g = chi4_girth5_graph()
    with pytest.raises(ResourceLimitError):
        chromatic_number(g, 1)
