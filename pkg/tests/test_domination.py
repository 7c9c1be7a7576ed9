import itertools

from hypothesis import given, strategies as st

from hamlab.contraction import petersen, wagner
from hamlab.domination import (domination_number, edge_dominates,
                               edge_domination_number, is_dominating_set)
from hamlab.multigraph import MultiGraph, attach_pendant


def brute_domination_number(g):
    verts = sorted(g.vertices)
    for k in range(0, g.n + 1):
        for s in itertools.combinations(verts, k):
            if is_dominating_set(g, set(s)):
                return k
    return g.n


def brute_edge_domination_number(g):
    eids = g.edge_ids()
    for k in range(0, g.m + 1):
        for s in itertools.combinations(eids, k):
            if edge_dominates(g, set(s)):
                return k
    return g.m


def test_petersen_domination_numbers():
    assert domination_number(petersen())[0] == 3
    assert edge_domination_number(petersen())[0] == 3


def test_wagner_domination_numbers():
    assert domination_number(wagner())[0] == 3
    assert edge_domination_number(wagner())[0] == 3


def test_decorated_petersen_edge_domination():
    g = petersen()
    for v in range(10):
        g, _ = attach_pendant(g, v)
    gamma, witness = edge_domination_number(g)
    assert gamma == 5
    assert edge_dominates(g, witness.members)
    assert witness.size == 5


def test_witnesses_validate():
    g = MultiGraph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
    gamma, w = domination_number(g)
    assert gamma == 2 and is_dominating_set(g, w.members)
    ge, we = edge_domination_number(g)
    assert edge_dominates(g, we.members) and ge == len(we.members)


@st.composite
def small_connected_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    all_pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(all_pairs), max_size=len(all_pairs)))
    pairs = [p for p, keep in zip(all_pairs, mask) if keep]
    # spanning path keeps it connected
    pairs += [(i, i + 1) for i in range(n - 1)]
    return MultiGraph.from_edges(n, pairs)


@given(small_connected_graphs())
def test_domination_matches_brute_force(g):
    assert domination_number(g)[0] == brute_domination_number(g)


@given(small_connected_graphs())
def test_edge_domination_matches_brute_force(g):
    if g.m == 0:
        return
    assert edge_domination_number(g)[0] == brute_edge_domination_number(g)
