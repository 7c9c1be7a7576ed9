import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from hamlab.contraction import petersen
from hamlab.errors import TooFewEdges
from hamlab.multigraph import MultiGraph
from hamlab.structure import (claw, diamond, find_induced_claw, find_subgraph,
                              is_claw_free, is_essentially_k_edge_connected,
                              is_k_edge_connected, multitriangle, to_networkx,
                              triple_edge, vertex_connectivity_at_least)


def test_petersen_is_3_connected():
    ok, cut = vertex_connectivity_at_least(petersen(), 3)
    assert ok and cut is None
    ok, cut = vertex_connectivity_at_least(petersen(), 4)
    assert not ok and len(cut) == 3


def test_cut_vertex_detected():
    bowtie = MultiGraph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    ok, cut = vertex_connectivity_at_least(bowtie, 2)
    assert not ok and cut == {2}


def test_claw_detection():
    assert find_induced_claw(claw()) is not None
    assert is_claw_free(petersen()) is False  # Petersen contains induced claws
    k4 = MultiGraph.from_edges(4, [p for p in itertools.combinations(range(4), 2)])
    assert is_claw_free(k4)
    # star inside a triangle-dominated graph: K4 minus an edge has no claw
    assert is_claw_free(diamond())


def test_claw_needs_independent_leaves():
    # K1,3 plus one leaf-leaf edge: the only 3 leaves are not independent
    g = MultiGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    assert find_induced_claw(g) is None


def test_edge_connectivity():
    c4 = MultiGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert is_k_edge_connected(c4, 2)[0]
    ok, cut = is_k_edge_connected(c4, 3)
    assert not ok and len(cut) == 2


def test_essential_edge_connectivity():
    # triangle with a pendant: the pendant edge is a 1-cut but not essential
    g = MultiGraph.from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
    assert is_essentially_k_edge_connected(g, 2)[0]
    # two triangles joined by a bridge: the bridge separates two edges from two
    h = MultiGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    ok, cut = is_essentially_k_edge_connected(h, 2)
    assert not ok and len(cut) == 1


def test_essential_connectivity_requires_enough_edges():
    with pytest.raises(TooFewEdges):
        is_essentially_k_edge_connected(MultiGraph.from_edges(2, [(0, 1)]), 3)


def test_find_subgraph_patterns():
    g = MultiGraph.from_edges(4, [(0, 1), (0, 1), (1, 2), (2, 3)])
    assert find_subgraph(g, triple_edge()) is None
    g3 = g.with_edge(0, 1)
    assert find_subgraph(g3, triple_edge()) is not None
    tri2 = MultiGraph.from_edges(3, [(0, 1), (1, 2), (0, 2), (0, 2)])
    assert find_subgraph(tri2, multitriangle()) is not None
    assert find_subgraph(tri2, diamond()) is None
    k4e = MultiGraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert find_subgraph(k4e, diamond()) is not None


@st.composite
def small_simple_graphs(draw):
    n = draw(st.integers(min_value=2, max_value=7))
    all_pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(all_pairs), max_size=len(all_pairs)))
    return MultiGraph.from_edges(n, [p for p, keep in zip(all_pairs, mask) if keep])


@given(small_simple_graphs())
def test_vertex_connectivity_matches_networkx(g):
    gx = to_networkx(g)
    for k in (1, 2, 3):
        expected = nx.node_connectivity(gx) >= k if g.n > k else False
        assert vertex_connectivity_at_least(g, k)[0] == expected


@given(small_simple_graphs())
def test_claw_free_matches_brute_force(g):
    brute = True
    for c in g.vertices:
        nbrs = sorted(g.neighbors(c))
        for trio in itertools.combinations(nbrs, 3):
            if all(not g.adjacent(a, b) for a, b in itertools.combinations(trio, 2)):
                brute = False
    assert is_claw_free(g) == brute
