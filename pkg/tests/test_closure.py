import itertools

import pytest

from hamlab.canonical import is_isomorphic
from hamlab.closure import eligible_vertices, is_m_closed, local_completion, ryjacek_closure
from hamlab.hamilton import hamilton_cycle
from hamlab.multigraph import MultiGraph
from hamlab.structure import is_claw_free


def diamond():
    return MultiGraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def k4():
    return MultiGraph.from_edges(4, list(itertools.combinations(range(4), 2)))


def test_closure_of_diamond_is_k4():
    cl, trace = ryjacek_closure(diamond())
    assert is_isomorphic(cl, k4())
    assert len(trace.steps) == 1


def test_complete_graph_is_closed():
    cl, trace = ryjacek_closure(k4())
    assert not trace.steps and cl.m == k4().m


def test_cycle_is_closed():
    c6 = MultiGraph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    cl, trace = ryjacek_closure(c6)
    assert not trace.steps


def test_closure_rejects_claws():
    star = MultiGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(ValueError):
        ryjacek_closure(star)


def test_closure_preserves_claw_freeness_and_vertices():
    g = MultiGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (3, 5)])
    cl, _ = ryjacek_closure(g)
    assert set(cl.vertices) == set(g.vertices)
    assert is_claw_free(cl)
    assert set(g.edge_ids()) <= set(cl.edge_ids()) or cl.m >= g.m


def test_closure_idempotent_and_order_independent():
    g = MultiGraph.from_edges(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4),
                                  (4, 5), (5, 6), (4, 6)])
    cl, _ = ryjacek_closure(g)
    cl2, trace2 = ryjacek_closure(cl)
    assert not trace2.steps
    clr, _ = ryjacek_closure(g, reverse=True)
    assert {frozenset(cl.endpoints(e)) for e in cl.edge_ids()} == \
           {frozenset(clr.endpoints(e)) for e in clr.edge_ids()}


def test_closure_preserves_hamiltonicity_sample():
    # a non-Hamiltonian claw-free graph stays non-Hamiltonian after closure
    path = MultiGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    cl, _ = ryjacek_closure(path)
    assert (hamilton_cycle(path) is None) == (hamilton_cycle(cl) is None)


def test_eligible_and_local_completion():
    g = diamond()
    elig = eligible_vertices(g)
    assert elig  # vertices 1 and 2 see a connected noncomplete neighborhood
    v = min(elig)
    out, added = local_completion(g, v)
    assert added and out.m == g.m + len(added)


def test_is_m_closed():
    ok, reason = is_m_closed(MultiGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))
    assert ok and reason is None
    bad, why = is_m_closed(MultiGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    assert not bad and why[0] == "not_line_graph"
    # the diamond's preimage is the paw (triangle plus pendant): pattern-free
    ok2, why2 = is_m_closed(diamond())
    assert ok2
    # the line graph of the diamond has only diamond-containing preimages
    from hamlab.linegraph import line_graph
    ld, _ = line_graph(diamond())
    ok3, why3 = is_m_closed(ld)
    assert not ok3 and why3[0] == "diamond"
