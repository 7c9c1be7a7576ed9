import itertools

import pytest

from hamlab.atlas import (EnumSpec, domination_at_most, enumerate_3hypergraphs,
                          enumerate_graphs, enumerate_multigraphs)
from hamlab.canonical import canonical_form
from hamlab.errors import SizeBoundExceeded
from hamlab.hypergraph import Hypergraph3, incidence_graph
from hamlab.multigraph import MultiGraph


def count(fn, *args, **kw):
    return fn(*args, visit=lambda g: None, **kw) if "visit" not in kw else fn(*args, **kw)


def test_simple_graph_counts():
    # OEIS-free frozen values, checked against independent brute force below
    assert enumerate_graphs(EnumSpec(1), lambda g: None) == 1
    assert enumerate_graphs(EnumSpec(2), lambda g: None) == 2
    assert enumerate_graphs(EnumSpec(3), lambda g: None) == 4
    assert enumerate_graphs(EnumSpec(4), lambda g: None) == 11
    assert enumerate_graphs(EnumSpec(5), lambda g: None) == 34


def test_connected_graph_counts():
    assert enumerate_graphs(EnumSpec(4, filters=("connected",)), lambda g: None) == 6
    assert enumerate_graphs(EnumSpec(5, filters=("connected",)), lambda g: None) == 21


def test_claw_free_counts():
    got = [enumerate_graphs(EnumSpec(n, filters=("claw-free",)), lambda g: None)
           for n in range(1, 7)]
    assert got == [1, 2, 4, 10, 26, 85]


def brute_count_simple(n, pred=lambda g: True):
    seen = set()
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = MultiGraph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if pred(g):
            seen.add(canonical_form(g))
    return len(seen)


def test_counts_match_brute_force_small():
    for n in (2, 3, 4):
        assert enumerate_graphs(EnumSpec(n), lambda g: None) == brute_count_simple(n)
        assert enumerate_graphs(EnumSpec(n, filters=("connected",)), lambda g: None) == \
            brute_count_simple(n, lambda g: g.is_connected())


def test_multigraph_counts_match_brute_force():
    def brute_multi(n, cap, max_edges=None):
        seen = set()
        pairs = list(itertools.combinations(range(n), 2))
        for vec in itertools.product(range(cap + 1), repeat=len(pairs)):
            edges = []
            for p, m in zip(pairs, vec):
                edges.extend([p] * m)
            if max_edges is not None and len(edges) > max_edges:
                continue
            seen.add(canonical_form(MultiGraph.from_edges(n, edges)))
        return len(seen)

    assert enumerate_multigraphs(EnumSpec(2, max_multiplicity=2), lambda g: None) == \
        brute_multi(2, 2) == 3
    assert enumerate_multigraphs(EnumSpec(3, max_multiplicity=2), lambda g: None) == \
        brute_multi(3, 2)
    assert enumerate_multigraphs(EnumSpec(4, max_multiplicity=2, max_edges=5), lambda g: None) == \
        brute_multi(4, 2, 5)


def test_hypergraph_counts_match_brute_force():
    def brute_hyper(n, mmax):
        cands = [frozenset(c) for c in itertools.combinations(range(n), 2)] + \
                [frozenset(c) for c in itertools.combinations(range(n), 3)]
        seen = set()
        for m in range(1, mmax + 1):
            for combo in itertools.combinations_with_replacement(cands, m):
                if any(combo.count(c) > 2 for c in combo):
                    continue
                hg = Hypergraph3(range(n), list(combo))
                ig = incidence_graph(hg)
                seen.add(canonical_form(ig.graph, colors=ig.colors()))
        return len(seen)

    for n, mmax in ((2, 2), (3, 3), (4, 2)):
        got = enumerate_3hypergraphs(n, mmax, lambda h: None)
        assert got == brute_hyper(n, mmax)


def test_custom_filter_and_bounds():
    cnt = enumerate_graphs(EnumSpec(4, filters=("connected", domination_at_most(1))),
                           lambda g: None)
    # connected 4-vertex graphs with a dominating vertex: star, paw, diamond, K4,
    # and the "chair"-free ones -- frozen against the brute force
    assert cnt == brute_count_simple(4, lambda g: g.is_connected()
                                     and any(len(g.neighbors(v)) == 3 for v in g.vertices))
    with pytest.raises(SizeBoundExceeded):
        enumerate_graphs(EnumSpec(99), lambda g: None)
    with pytest.raises(ValueError):
        enumerate_graphs(EnumSpec(3, filters=("no-such-filter",)), lambda g: None)


def test_visit_receives_final_level_only():
    sizes = []
    enumerate_graphs(EnumSpec(4, filters=("connected",)), lambda g: sizes.append(g.n))
    assert sizes and all(s == 4 for s in sizes)
