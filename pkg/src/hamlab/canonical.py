"""Canonical forms and isomorphism for small multigraphs.

Equitable-partition refinement plus individualization backtracking; discovered
automorphisms prune sibling branches, so dense symmetric graphs (complete
graphs, closures) stay tractable.  Equal byte strings <=> isomorphic, with
multiplicities and an optional vertex coloring respected.
"""

from __future__ import annotations

from typing import Optional

from .errors import SizeBoundExceeded
from .multigraph import MultiGraph

DEFAULT_SIZE_BOUND = 32


def canonical_form(g: MultiGraph, colors: Optional[dict] = None,
                   size_bound: int = DEFAULT_SIZE_BOUND) -> bytes:
    """Deterministic byte string, equal for two graphs iff they are isomorphic.

    `colors` (vertex -> sortable value) constrains isomorphisms to be
    color-preserving; provenance labels on the graph are deliberately ignored.
    """
    if g.n > size_bound:
        raise SizeBoundExceeded(f"canonical_form limited to {size_bound} vertices, got {g.n}")
    if g.n == 0:
        return b"(0)"
    return repr(_canonical_tuple(g, colors)).encode()


def is_isomorphic(g1: MultiGraph, g2: MultiGraph,
                  colors1: Optional[dict] = None, colors2: Optional[dict] = None) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    return canonical_form(g1, colors1) == canonical_form(g2, colors2)


def _canonical_tuple(g: MultiGraph, colors):
    verts = list(g.vertices)
    mult = {v: {} for v in verts}
    loops = {v: 0 for v in verts}
    for _, (u, v) in g.edge_items():
        if u == v:
            loops[u] += 1
        else:
            mult[u][v] = mult[u].get(v, 0) + 1
            mult[v][u] = mult[v].get(u, 0) + 1

    if colors is None:
        colors = {v: 0 for v in verts}
    by_color = {}
    for v in verts:
        by_color.setdefault(colors[v], []).append(v)
    partition = [sorted(by_color[c], key=_sort_key) for c in sorted(by_color, key=_sort_key)]
    color_rank = {}
    for rank, c in enumerate(sorted(by_color, key=_sort_key)):
        for v in by_color[c]:
            color_rank[v] = rank

    state = _SearchState(mult, loops, color_rank)
    state.search(_refine(partition, mult, loops), [])
    return state.best


def _sort_key(x):
    return (str(type(x).__name__), repr(x))


def _refine(partition, mult, loops):
    """Split cells by (loop count, edge multiplicity into each cell) to a fixpoint."""
    partition = [list(c) for c in partition]
    changed = True
    while changed:
        changed = False
        for ci, cell in enumerate(partition):
            if len(cell) == 1:
                continue
            sigs = {}
            for v in cell:
                mv = mult[v]
                sig = (loops[v],) + tuple(sum(mv.get(u, 0) for u in c) for c in partition)
                sigs.setdefault(sig, []).append(v)
            if len(sigs) > 1:
                partition[ci:ci + 1] = [sigs[s] for s in sorted(sigs)]
                changed = True
                break
    return partition


class _SearchState:
    def __init__(self, mult, loops, color_rank):
        self.mult = mult
        self.loops = loops
        self.color_rank = color_rank
        self.best = None
        self.best_positions = None  # vertex -> position for the best leaf
        self.generators = []  # automorphisms as vertex -> vertex dicts

    def search(self, partition, fixed):
        target = next((i for i, c in enumerate(partition) if len(c) > 1), None)
        if target is None:
            self._leaf([c[0] for c in partition])
            return
        cell = partition[target]
        for v in self._orbit_representatives(cell, fixed):
            new_partition = partition[:target] + [[v], [u for u in cell if u != v]] + partition[target + 1:]
            self.search(_refine(new_partition, self.mult, self.loops), fixed + [v])

    def _orbit_representatives(self, cell, fixed):
        """One vertex per orbit of the subgroup (of found automorphisms) fixing `fixed`."""
        gens = [p for p in self.generators if all(p[f] == f for f in fixed)]
        if not gens:
            return list(cell)
        parent = {v: v for v in cell}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in gens:
            for v in cell:
                w = p[v]
                if w in parent:
                    ra, rb = find(v), find(w)
                    if ra != rb:
                        parent[ra] = rb
        reps, seen = [], set()
        for v in cell:  # cell order keeps determinism
            r = find(v)
            if r not in seen:
                seen.add(r)
                reps.append(v)
        return reps

    def _leaf(self, order):
        n = len(order)
        pos = {v: i for i, v in enumerate(order)}
        row = []
        for i in range(n):
            vi = order[i]
            row.append(self.loops[vi])
            mvi = self.mult[vi]
            for j in range(i + 1, n):
                row.append(mvi.get(order[j], 0))
        enc = (n, tuple(self.color_rank[v] for v in order), tuple(row))
        if self.best is None or enc < self.best:
            self.best = enc
            self.best_positions = pos
        elif enc == self.best:
            best_inv = {i: u for u, i in self.best_positions.items()}
            auto = {v: best_inv[pos[v]] for v in pos}
            if any(auto[v] != v for v in auto) and auto not in self.generators:
                self.generators.append(auto)
