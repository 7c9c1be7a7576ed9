import itertools

import pytest

from hamlab.canonical import is_isomorphic
from hamlab.contraction import petersen
from hamlab.errors import NotLineGraph
from hamlab.hypergraph import Hypergraph3
from hamlab.linegraph import line_graph, line_graph_h3, preimage, simplicial_vertices, verify_preimage
from hamlab.multigraph import MultiGraph
from hamlab.structure import claw


def test_line_graph_of_petersen():
    lg, corr = line_graph(petersen())
    assert lg.n == 15 and lg.m == 30
    assert all(lg.degree(v) == 4 for v in lg.vertices)


def test_line_graph_vertex_per_edge_and_adjacency():
    g = MultiGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    lg, corr = line_graph(g)
    assert set(lg.vertices) == set(g.edge_ids())
    assert lg.adjacent(0, 1) and lg.adjacent(1, 2) and not lg.adjacent(0, 2)


def test_line_graph_of_parallel_edges():
    g = MultiGraph.from_edges(2, [(0, 1), (0, 1)])
    lg, _ = line_graph(g)
    assert lg.n == 2 and lg.m == 1


def test_preimage_of_triangle_is_star():
    k3 = MultiGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    h = preimage(k3)
    assert sorted(h.degree(v) for v in h.vertices) == [1, 1, 1, 3]
    assert verify_preimage(k3, h)


def test_preimage_round_trip_on_samples():
    samples = [
        MultiGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
        petersen(),
        MultiGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
    ]
    for g in samples:
        lg, _ = line_graph(g)
        h = preimage(lg)
        back, _ = line_graph(h)
        assert is_isomorphic(back, lg)


def test_claw_is_not_a_line_graph():
    with pytest.raises(NotLineGraph) as exc:
        preimage(claw())
    assert exc.value.obstruction is not None


def test_wheel5_is_not_a_line_graph():
    # W5: claw-free but not a line graph (odd wheel)
    rim = [(i, i % 5 + 1) for i in range(1, 6)]
    g = MultiGraph.from_edges(6, rim + [(0, i) for i in range(1, 6)])
    with pytest.raises(NotLineGraph):
        preimage(g)


def test_simplicial_vertices():
    g = MultiGraph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert 3 in simplicial_vertices(g)
    assert 0 in simplicial_vertices(g)
    assert 2 not in simplicial_vertices(g)


def test_hypergraph_line_graph():
    hg = Hypergraph3(range(4), [frozenset({0, 1, 2}), frozenset({1, 2, 3}), frozenset({0, 3})])
    lg, owner = line_graph_h3(hg)
    assert lg.n == 3
    # hyperedges 0,1 share {1,2}; 0,2 share {0}; 1,2 share {3} -> triangle
    assert lg.m == 3
    assert owner[0] == frozenset({0, 1, 2})


def test_hypergraph_line_graph_disjoint_edges():
    hg = Hypergraph3(range(5), [frozenset({0, 1, 2}), frozenset({3, 4})])
    lg, _ = line_graph_h3(hg)
    assert lg.n == 2 and lg.m == 0
