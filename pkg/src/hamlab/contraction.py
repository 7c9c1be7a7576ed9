"""Petersen/Wagner constants, contraction by a vertex partition, and the
constrained contraction searches used by the trail-or-contraction dichotomies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .canonical import is_isomorphic
from .errors import Indeterminate, SizeBoundExceeded, UnknownEdge
from .multigraph import MultiGraph

DEFAULT_HOST_BOUND = 16
DEFAULT_NODE_BUDGET = 5_000_000


def petersen() -> MultiGraph:
    """Outer C5 (0..4), inner pentagram (5..9), five spokes."""
    pairs = [(i, (i + 1) % 5) for i in range(5)]
    pairs += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    pairs += [(i, i + 5) for i in range(5)]
    return MultiGraph.from_edges(10, pairs)


def wagner() -> MultiGraph:
    """Moebius-Kantor layout: C8 plus four antipodal chords."""
    pairs = [(i, (i + 1) % 8) for i in range(8)]
    pairs += [(i, i + 4) for i in range(4)]
    return MultiGraph.from_edges(8, pairs)


def contract(g: MultiGraph, partition: dict) -> MultiGraph:
    """Quotient multigraph: one vertex per part, one edge per crossing edge.

    `partition` maps every vertex of g to a part id.  Each part must induce a
    connected subgraph of g; intra-part edges are dropped.
    """
    parts = {}
    for v in g.vertices:
        if v not in partition:
            raise ValueError(f"vertex {v} missing from partition")
        parts.setdefault(partition[v], set()).add(v)
    for pid, members in parts.items():
        if not g.induced(members).is_connected():
            raise ValueError(f"part {pid!r} does not induce a connected subgraph")
    part_ids = sorted(parts, key=repr)
    quotient = MultiGraph(part_ids)
    for _, (u, v) in g.edge_items():
        pu, pv = partition[u], partition[v]
        if pu != pv:
            quotient = quotient.with_edge(pu, pv)
    return quotient


@dataclass
class ContractionCert:
    """Witness for a constrained contraction H -> target."""
    partition: dict              # vertex of H -> vertex of target
    target: MultiGraph
    marks: set = field(default_factory=set)
    constrained_edge: Optional[int] = None
    edge_image: Optional[tuple] = None  # (x, y) in target, for the edge-constrained mode

    def validate(self, host: MultiGraph) -> bool:
        try:
            q = contract(host, self.partition)
        except ValueError:
            return False
        if not is_isomorphic(q, self.target):
            return False
        classes = {}
        for v, p in self.partition.items():
            classes.setdefault(p, set()).add(v)
        if self.constrained_edge is None:
            return all(classes[p] & self.marks for p in self.target.vertices)
        a, b = host.endpoints(self.constrained_edge)
        x, y = self.partition[a], self.partition[b]
        if {x, y} != set(self.edge_image) or not self.target.adjacent(x, y):
            return False
        marked = {p for p in self.target.vertices if classes.get(p, set()) & self.marks}
        return marked == set(self.target.vertices) - {x, y}


def find_contraction(host: MultiGraph, target: MultiGraph, marks,
                     edge_constraint: Optional[int] = None,
                     host_bound: int = DEFAULT_HOST_BOUND,
                     node_budget: int = DEFAULT_NODE_BUDGET) -> Optional[ContractionCert]:
    """Search for a contraction of `host` onto `target`.

    Default mode: every target vertex's preimage must contain a mark.
    Edge-constrained mode (`edge_constraint` = host edge id): the edge must map
    to a target edge xy and the marks onto V(target) minus {x, y}.
    Exhaustive over partitions; None means proven nonexistence.
    """
    marks = set(marks)
    if host.n > host_bound:
        raise SizeBoundExceeded(f"host has {host.n} > {host_bound} vertices")
    if target.n > 10:
        raise SizeBoundExceeded("targets beyond 10 vertices unsupported")
    if edge_constraint is not None and not host.has_edge_id(edge_constraint):
        raise UnknownEdge(f"no edge with id {edge_constraint!r}")
    if host.n < target.n or host.m < target.m:
        return None
    if edge_constraint is None and len(marks) < target.n:
        return None
    if edge_constraint is not None and len(marks) < target.n - 2:
        return None

    tmult = {}
    for _, (x, y) in target.edge_items():
        key = frozenset((x, y))
        tmult[key] = tmult.get(key, 0) + 1
    tverts = list(target.vertices)

    # BFS order over host vertices keeps partial parts connected-ish early
    order = []
    seen = set()
    for s in sorted(host.vertices):
        if s in seen:
            continue
        queue = [s]
        seen.add(s)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(host.neighbors(v)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)

    e_ends = host.endpoints(edge_constraint) if edge_constraint is not None else None
    assign = {}
    crossing = {}
    counter = [0]

    def mult_between(v, u):
        return host.multiplicity(v, u)

    def search(i):
        counter[0] += 1
        if counter[0] > node_budget:
            raise Indeterminate("contraction search budget exceeded")
        if i == len(order):
            return finish()
        v = order[i]
        assigned_nbrs = [(u, mult_between(v, u)) for u in host.neighbors(v) if u in assign]
        for t in tverts:
            ok = True
            touched = []
            for u, mult in assigned_nbrs:
                tu = assign[u]
                if tu == t:
                    continue
                key = frozenset((t, tu))
                cap = tmult.get(key, 0)
                new = crossing.get(key, 0) + mult
                if new > cap:
                    ok = False
                    break
                crossing[key] = new
                touched.append((key, mult))
            if ok:
                assign[v] = t
                if _mark_prune_ok(assign, marks, tverts, order, i, edge_constraint, e_ends):
                    res = search(i + 1)
                    if res is not None:
                        return res
                del assign[v]
            for key, mult in touched:
                crossing[key] -= mult
        return None

    def finish():
        used = set(assign.values())
        if used != set(tverts):
            return None
        for key, cap in tmult.items():
            if crossing.get(key, 0) != cap:
                return None
        for key, cnt in crossing.items():
            if cnt != tmult.get(key, 0):
                return None
        classes = {}
        for v, t in assign.items():
            classes.setdefault(t, set()).add(v)
        for members in classes.values():
            if not host.induced(members).is_connected():
                return None
        if edge_constraint is None:
            if any(not (classes[t] & marks) for t in tverts):
                return None
            return ContractionCert(dict(assign), target, set(marks))
        a, b = e_ends
        x, y = assign[a], assign[b]
        if x == y or not target.adjacent(x, y):
            return None
        marked = {t for t in tverts if classes[t] & marks}
        if marked != set(tverts) - {x, y}:
            return None
        return ContractionCert(dict(assign), target, set(marks), edge_constraint, (x, y))

    return search(0)


def _mark_prune_ok(assign, marks, tverts, order, i, edge_constraint, e_ends):
    """Cheap feasibility pruning on mark placement."""
    remaining = len(order) - (i + 1)
    used = set(assign.values())
    if len(tverts) - len(used) > remaining:
        return False
    if edge_constraint is None:
        classes_with_mark = {assign[v] for v in assign if v in marks}
        remaining_marks = sum(1 for v in marks if v not in assign)
        need = sum(1 for t in tverts if t not in classes_with_mark)
        if need > remaining_marks:
            return False
    else:
        a, b = e_ends
        if a in assign and b in assign:
            x, y = assign[a], assign[b]
            if x == y:
                return False
            if any(v in marks and assign[v] in (x, y) for v in assign):
                return False
    return True
