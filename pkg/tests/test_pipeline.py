import pytest

from hamlab.contraction import petersen
from hamlab.domination import edge_domination_number
from hamlab.hypergraph import Hypergraph3
from hamlab.multigraph import MultiGraph, attach_pendant, subdivide_edge
from hamlab.pipeline import (verify_dct_instance, verify_idt_instance,
                             verify_quasitrail_instance)
from hamlab.walks import dominated_by_vertices, validate_quasitrail


def k4():
    import itertools
    return MultiGraph.from_edges(4, list(itertools.combinations(range(4), 2)))


def decorated_k4():
    g = k4()
    g, _ = attach_pendant(g, 0)
    g, _ = subdivide_edge(g, 5)
    return g


def test_dct_certificate_branch():
    g = decorated_k4()
    gamma, w = edge_domination_number(g)
    report = verify_dct_instance(g, w.members, instance="k4+")
    assert report.branch == "certificate"
    cert = report.payload
    assert cert.validate(g)
    assert dominated_by_vertices(g, cert.visited())
    js = report.to_json()
    assert js["pipeline"] == "dct" and js["branch"] == "certificate"


def test_dct_exception_branch():
    g = petersen()
    for v in range(10):
        g, _ = attach_pendant(g, v)
    gamma, w = edge_domination_number(g)
    report = verify_dct_instance(g, w.members)
    assert report.branch == "exception"
    assert report.payload.validate(petersen()) or report.payload.validate(g)


def test_dct_rejects_bad_inputs():
    path = MultiGraph.from_edges(5, [(i, i + 1) for i in range(4)])
    with pytest.raises(ValueError):
        verify_dct_instance(path, [1])  # not essentially 3-edge-connected
    g = decorated_k4()
    with pytest.raises(ValueError):
        verify_dct_instance(g, [0])  # single edge does not dominate


def test_idt_certificate_branch():
    g = k4()
    gamma, w = edge_domination_number(g)
    report = verify_idt_instance(g, 0, 5, w.members)
    assert report.branch == "certificate"
    assert report.payload.validate(g)


def test_idt_rejects_equal_edges():
    g = k4()
    with pytest.raises(ValueError):
        verify_idt_instance(g, 0, 0, [0])


def test_quasitrail_certificate_branch():
    hg = Hypergraph3(range(4), [frozenset({0, 1, 2}), frozenset({1, 2, 3}),
                                frozenset({0, 3}), frozenset({0, 2})])
    # every hyperedge meets {0,1,2}: hyperedge 0 dominates everything
    report = verify_quasitrail_instance(hg, [0])
    assert report.branch == "certificate"


def test_quasitrail_rejects_non_dominating():
    hg = Hypergraph3(range(5), [frozenset({0, 1, 2}), frozenset({1, 2, 3}),
                                frozenset({3, 4}), frozenset({0, 4}), frozenset({0, 3})])
    with pytest.raises(ValueError):
        verify_quasitrail_instance(hg, [2])


def test_quasitrail_requires_3_connected_line_graph():
    hg = Hypergraph3(range(4), [frozenset({0, 1}), frozenset({1, 2}),
                                frozenset({2, 3}), frozenset({1, 2, 3})])
    with pytest.raises(ValueError):
        verify_quasitrail_instance(hg, [3])
