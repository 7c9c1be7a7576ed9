"""Exhaustive enumeration of small graphs, multigraphs, and rank-3 hypergraphs
up to isomorphism, with composable filters.

Simple graphs and multigraphs grow vertex by vertex with canonical-form
deduplication at every level; hereditary filters (claw-free, triangle-free)
prune during growth since every such graph has a one-vertex-smaller induced
subgraph with the same property.  Hypergraphs are generated naively as
hyperedge multisets and deduplicated through their colored incidence graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional, Union

from .canonical import canonical_form
from .errors import SizeBoundExceeded
from .hypergraph import Hypergraph3, incidence_graph
from .multigraph import MultiGraph
from .structure import (is_claw_free, is_essentially_k_edge_connected,
                        vertex_connectivity_at_least)

MAX_SIMPLE_N = 10
MAX_MULTI_N = 7
MAX_MULTIPLICITY = 3
MAX_HYPER_N = 6


def _triangle_free(g: MultiGraph) -> bool:
    for v in g.vertices:
        nbrs = sorted(g.neighbors(v), key=repr)
        for a, b in combinations(nbrs, 2):
            if g.adjacent(a, b):
                return False
    return True


def _essentially_3ec(g: MultiGraph) -> bool:
    if g.m < 4:
        return False
    return is_essentially_k_edge_connected(g, 3)[0]


FILTERS: dict = {
    "connected": lambda g: g.is_connected(),
    "2-connected": lambda g: vertex_connectivity_at_least(g, 2)[0],
    "3-connected": lambda g: vertex_connectivity_at_least(g, 3)[0],
    "claw-free": is_claw_free,
    "triangle-free": _triangle_free,
    "essentially-3-edge-connected": _essentially_3ec,
}

# properties preserved by taking induced subgraphs; safe to prune mid-growth
HEREDITARY = {"claw-free", "triangle-free"}


def domination_at_most(d: int) -> Callable[[MultiGraph], bool]:
    from .domination import domination_number

    def pred(g: MultiGraph) -> bool:
        return domination_number(g)[0] <= d

    pred.filter_name = f"domination<={d}"
    return pred


@dataclass
class EnumSpec:
    n: int
    max_multiplicity: int = 1
    max_edges: Optional[int] = None
    filters: Iterable[Union[str, Callable]] = field(default_factory=tuple)

    def resolved_filters(self):
        out = []
        for f in self.filters:
            if callable(f):
                out.append((getattr(f, "filter_name", repr(f)), f))
            elif f in FILTERS:
                out.append((f, FILTERS[f]))
            else:
                raise ValueError(f"unknown filter {f!r}")
        return out

    def hereditary_prunes(self):
        return [FILTERS[f] for f in self.filters
                if isinstance(f, str) and f in HEREDITARY]


def enumerate_graphs(spec: EnumSpec, visit: Callable[[MultiGraph], None]) -> int:
    """One simple graph per isomorphism class on exactly spec.n vertices
    passing every filter; returns the emitted count, deterministic order."""
    if spec.n < 1 or spec.n > MAX_SIMPLE_N:
        raise SizeBoundExceeded(f"simple-graph enumeration supports 1..{MAX_SIMPLE_N} vertices")
    prunes = spec.hereditary_prunes()
    level = {canonical_form(MultiGraph.from_edges(1, [])): MultiGraph.from_edges(1, [])}
    for k in range(2, spec.n + 1):
        nxt = {}
        for key in sorted(level):
            g = level[key]
            old = sorted(g.vertices)
            for r in range(0, k):
                for nbrs in combinations(old, r):
                    ng = g.with_vertex(k - 1)
                    for u in nbrs:
                        ng = ng.with_edge(u, k - 1)
                    if spec.max_edges is not None and ng.m > spec.max_edges:
                        continue
                    if any(not p(ng) for p in prunes):
                        continue
                    ck = canonical_form(ng)
                    if ck not in nxt:
                        nxt[ck] = ng
        level = nxt
    preds = spec.resolved_filters()
    count = 0
    for key in sorted(level):
        g = level[key]
        if all(p(g) for _, p in preds):
            visit(g)
            count += 1
    return count


def enumerate_multigraphs(spec: EnumSpec, visit: Callable[[MultiGraph], None]) -> int:
    """Loopless multigraphs on exactly spec.n vertices up to multiplicity-aware
    isomorphism; same filter semantics as enumerate_graphs."""
    if spec.n < 1 or spec.n > MAX_MULTI_N:
        raise SizeBoundExceeded(f"multigraph enumeration supports 1..{MAX_MULTI_N} vertices")
    if spec.max_multiplicity > MAX_MULTIPLICITY:
        raise SizeBoundExceeded(f"multiplicity capped at {MAX_MULTIPLICITY}")
    prunes = spec.hereditary_prunes()
    seed = MultiGraph.from_edges(1, [])
    level = {canonical_form(seed): seed}
    for k in range(2, spec.n + 1):
        nxt = {}
        for key in sorted(level):
            g = level[key]
            old = sorted(g.vertices)
            for vector in _multiplicity_vectors(len(old), spec.max_multiplicity):
                ng = g.with_vertex(k - 1)
                for u, mult in zip(old, vector):
                    for _ in range(mult):
                        ng = ng.with_edge(u, k - 1)
                if spec.max_edges is not None and ng.m > spec.max_edges:
                    continue
                if any(not p(ng) for p in prunes):
                    continue
                ck = canonical_form(ng)
                if ck not in nxt:
                    nxt[ck] = ng
        level = nxt
    preds = spec.resolved_filters()
    count = 0
    for key in sorted(level):
        g = level[key]
        if all(p(g) for _, p in preds):
            visit(g)
            count += 1
    return count


def _multiplicity_vectors(length, cap):
    if length == 0:
        yield ()
        return
    for rest in _multiplicity_vectors(length - 1, cap):
        for m in range(cap + 1):
            yield rest + (m,)


def enumerate_3hypergraphs(n: int, max_hyperedges: int,
                           visit: Callable[[Hypergraph3], None],
                           min_hyperedges: int = 1) -> int:
    """Hypergraphs on exactly n vertices, hyperedge sizes 2 or 3, multiset
    multiplicity up to 2, one representative per isomorphism class."""
    if n < 2 or n > MAX_HYPER_N:
        raise SizeBoundExceeded(f"hypergraph enumeration supports 2..{MAX_HYPER_N} vertices")
    candidates = ([frozenset(c) for c in combinations(range(n), 2)]
                  + [frozenset(c) for c in combinations(range(n), 3)])
    reps = {}

    def grow(i, chosen):
        if len(chosen) >= min_hyperedges:
            hg = Hypergraph3(range(n), chosen)
            ig = incidence_graph(hg)
            key = canonical_form(ig.graph, colors=ig.colors())
            if key not in reps:
                reps[key] = hg
        if len(chosen) == max_hyperedges or i == len(candidates):
            return
        for j in range(i, len(candidates)):
            for mult in (1, 2):
                if len(chosen) + mult > max_hyperedges:
                    break
                grow(j + 1, chosen + [candidates[j]] * mult)

    grow(0, [])
    count = 0
    for key in sorted(reps):
        visit(reps[key])
        count += 1
    return count
