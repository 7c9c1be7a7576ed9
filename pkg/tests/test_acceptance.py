"""Acceptance gate: each test sweeps one claimed equivalence or construction
over its full enumerated population via the shared suite implementations."""

from hamlab.suites import (suite_closure, suite_core_unique, suite_dct,
                           suite_dichotomy, suite_dom2_hamilton,
                           suite_dom3_hamilton,
                           suite_dom3_hamilton_connected, suite_idt,
                           suite_petersen_sharp, suite_pipeline_multigraph,
                           suite_pipeline_quasitrail, suite_witnesses)


def _assert_clean(result):
    assert result.checked > 0, f"{result.name}: empty population"
    assert not result.violations, f"{result.name}: {result.violations[:5]}"
    assert not result.indeterminate, f"{result.name}: {result.indeterminate[:5]}"


def test_criterion_1_line_graph_hamiltonicity_equals_dominating_trail():
    _assert_clean(suite_dct())


def test_criterion_2_line_graph_path_equals_terminal_edge_trail():
    _assert_clean(suite_idt())


def test_criterion_3_domination_2_forces_hamiltonicity():
    _assert_clean(suite_dom2_hamilton())


def test_criterion_4_domination_3_forces_hamiltonicity():
    _assert_clean(suite_dom3_hamilton())


def test_criterion_4b_domination_3_forces_hamilton_connectedness():
    _assert_clean(suite_dom3_hamilton_connected())


def test_criterion_5_decorated_petersen_is_sharp():
    _assert_clean(suite_petersen_sharp())


def test_criterion_6a_multigraph_pipelines_are_sound():
    _assert_clean(suite_pipeline_multigraph())


def test_criterion_6b_hypergraph_pipeline_is_sound():
    _assert_clean(suite_pipeline_quasitrail())


def test_criterion_7_core_is_unique_and_3_edge_connected():
    _assert_clean(suite_core_unique())


def test_criterion_8_trail_or_contraction_dichotomy():
    _assert_clean(suite_dichotomy())


def test_criterion_9_closure_properties():
    _assert_clean(suite_closure())


def test_criterion_10_tripartite_witnesses_and_blowups():
    _assert_clean(suite_witnesses())
