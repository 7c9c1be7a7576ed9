"""Exact search engine: Hamilton cycles/paths, closed trails through prescribed
vertices and edges, dominating closed trails, internally dominating trails, and
dominating quasitrails on incidence graphs.

All "absent" answers are conclusions of exhaustive backtracking; exceeding a
node budget raises Indeterminate instead of silently giving up.
"""

from __future__ import annotations

from typing import Optional

from .errors import Indeterminate
from .multigraph import MultiGraph
from .walks import WalkCert, dominated_by_vertices, extend_with_detours, trivial_closed_trail

DEFAULT_NODE_BUDGET = 20_000_000


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n):
        self.left = n

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise Indeterminate("search budget exceeded")


def _edge_for(g: MultiGraph, u, v):
    return min(g.edges_between(u, v))


def hamilton_cycle(g: MultiGraph, node_budget: int = DEFAULT_NODE_BUDGET) -> Optional[WalkCert]:
    """A Hamilton cycle certificate, or None after a complete search."""
    g.require_simple()
    n = g.n
    if n < 3:
        raise ValueError("Hamilton cycle needs at least 3 vertices")
    verts = sorted(g.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    adj = [0] * n
    for _, (u, v) in g.edge_items():
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]
    full = (1 << n) - 1
    if any(bin(a).count("1") < 2 for a in adj):
        return None
    start = min(range(n), key=lambda i: bin(adj[i]).count("1"))
    budget = _Budget(node_budget)
    path = [start]

    def prune(cur, visited):
        unvisited = full & ~visited
        allowed = unvisited | (1 << cur) | (1 << start)
        m = unvisited
        while m:
            b = m & -m
            i = b.bit_length() - 1
            if bin(adj[i] & allowed).count("1") < 2:
                return True
            m ^= b
        # connectivity of unvisited + current
        frontier = 1 << cur
        reach = frontier
        while frontier:
            nxt = 0
            mm = frontier
            while mm:
                b = mm & -mm
                i = b.bit_length() - 1
                nxt |= adj[i] & (unvisited | (1 << start))
                mm ^= b
            nxt &= ~reach
            reach |= nxt
            frontier = nxt
        return (unvisited & ~reach) != 0

    def extend(cur, visited):
        budget.tick()
        if visited == full:
            return bool(adj[cur] & (1 << start))
        if prune(cur, visited):
            return False
        m = adj[cur] & ~visited
        while m:
            b = m & -m
            i = b.bit_length() - 1
            path.append(i)
            if extend(i, visited | b):
                return True
            path.pop()
            m ^= b
        return False

    if extend(start, 1 << start):
        vs = [verts[i] for i in path] + [verts[start]]
        es = [_edge_for(g, vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
        return WalkCert("cycle", vs, es)
    return None


def hamilton_path(g: MultiGraph, a, b, node_budget: int = DEFAULT_NODE_BUDGET) -> Optional[WalkCert]:
    """A Hamilton (a, b)-path, or None after a complete search."""
    g.require_simple()
    if a == b:
        raise ValueError("endpoints must be distinct")
    n = g.n
    verts = sorted(g.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    adj = [0] * n
    for _, (u, v) in g.edge_items():
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]
    full = (1 << n) - 1
    ai, bi = idx[a], idx[b]
    budget = _Budget(node_budget)
    path = [ai]

    def prune(cur, visited):
        unvisited = full & ~visited
        allowed = unvisited | (1 << cur) | (1 << bi)
        m = unvisited & ~(1 << bi)
        while m:
            b_ = m & -m
            i = b_.bit_length() - 1
            if bin(adj[i] & allowed).count("1") < 2:
                return True
            m ^= b_
        if unvisited & (1 << bi) and not (adj[bi] & (unvisited | (1 << cur))):
            return True
        frontier = 1 << cur
        reach = frontier
        while frontier:
            nxt = 0
            mm = frontier
            while mm:
                b_ = mm & -mm
                i = b_.bit_length() - 1
                nxt |= adj[i] & unvisited
                mm ^= b_
            nxt &= ~reach
            reach |= nxt
            frontier = nxt
        return (unvisited & ~reach) != 0

    def extend(cur, visited):
        budget.tick()
        if visited == full:
            return cur == bi
        if cur == bi:
            return False
        if prune(cur, visited):
            return False
        m = adj[cur] & ~visited
        while m:
            b_ = m & -m
            i = b_.bit_length() - 1
            path.append(i)
            if extend(i, visited | b_):
                return True
            path.pop()
            m ^= b_
        return False

    if extend(ai, 1 << ai):
        vs = [verts[i] for i in path]
        es = [_edge_for(g, vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
        return WalkCert("path", vs, es)
    return None


def is_hamilton_connected(g: MultiGraph, node_budget: int = DEFAULT_NODE_BUDGET):
    """(True, None) or (False, first failing unordered pair)."""
    verts = sorted(g.vertices)
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            if hamilton_path(g, a, b, node_budget) is None:
                return False, (a, b)
    return True, None


def closed_trail_through(g: MultiGraph, marks, required: Optional[int] = None,
                         node_budget: int = DEFAULT_NODE_BUDGET) -> Optional[WalkCert]:
    """A closed trail visiting every vertex of `marks` and containing `required`.

    The single-vertex trivial trail is admitted when marks fit in one vertex
    and no edge is required.  None means proven nonexistence.
    """
    marks = set(marks)
    for v in marks:
        g.incident(v)
    if required is not None:
        g.endpoints(required)
    if required is None and len(marks) <= 1:
        v = min(marks) if marks else min(g.vertices)
        return trivial_closed_trail(v)

    start = min(g.endpoints(required)) if required is not None else min(marks)
    budget = _Budget(node_budget)
    used = set()
    seq_v = [start]
    seq_e = []
    visited = {start}

    def reachable_ok(cur):
        todo = (marks - visited) | ({start} if cur != start else set())
        if required is not None and required not in used:
            todo = todo | set(g.endpoints(required))
        if not todo:
            return True
        reach = {cur}
        stack = [cur]
        while stack:
            x = stack.pop()
            for e in g.incident(x):
                if e in used:
                    continue
                y = g.other_endpoint(e, x)
                if y not in reach:
                    reach.add(y)
                    stack.append(y)
        return todo <= reach

    def dfs(cur):
        budget.tick()
        if cur == start and marks <= visited and (required is None or required in used):
            return True
        if not reachable_ok(cur):
            return False
        for e in g.incident(cur):
            if e in used:
                continue
            y = g.other_endpoint(e, cur)
            used.add(e)
            seq_e.append(e)
            seq_v.append(y)
            was_new = y not in visited
            visited.add(y)
            if dfs(y):
                return True
            used.discard(e)
            seq_e.pop()
            seq_v.pop()
            if was_new:
                visited.discard(y)
        return False

    # trivial success at the empty trail is impossible here: len(marks) >= 2
    # or an edge is required, so dfs(start) cannot return immediately
    if dfs(start):
        return WalkCert("closed_trail", list(seq_v), list(seq_e))
    return None


def dominating_closed_trail(g: MultiGraph, node_budget: int = DEFAULT_NODE_BUDGET) -> Optional[WalkCert]:
    """A closed trail whose vertex set touches every edge, or None (complete search).

    Searches closed trails through each minimal vertex cover: any dominating
    closed trail contains one, and any trail through one dominates.
    """
    if not g.is_connected():
        raise ValueError("dominating closed trail requires a connected multigraph")
    if g.m == 0:
        return trivial_closed_trail(min(g.vertices))
    family = [frozenset(g.endpoints(e)) for e in g.edge_ids()]
    for cover in _minimal_hitting_sets(family):
        cert = closed_trail_through(g, cover, node_budget=node_budget)
        if cert is not None:
            return cert
    return None


def idt(g: MultiGraph, e1, e2, node_budget: int = DEFAULT_NODE_BUDGET) -> Optional[WalkCert]:
    """An internally dominating (e1, e2)-trail, or None after a complete search.

    Interior vertices = all visited vertices except the two terminal
    endvertices; a terminal vertex re-visited mid-trail counts as interior.
    """
    if e1 == e2:
        raise ValueError("terminal edges must be distinct")
    g.endpoints(e1)
    g.endpoints(e2)
    budget = _Budget(node_budget)
    all_edges = g.edge_items()

    def interior_dominates(seq_v):
        # a terminal vertex re-visited mid-trail is in the mid-slice, hence interior
        interior = set(seq_v[1:-1])
        return all(u in interior or v in interior for _, (u, v) in all_edges)

    for a in set(g.endpoints(e1)):
        b = g.other_endpoint(e1, a)
        used = {e1}
        seq_v = [a, b]
        seq_e = [e1]

        def dfs(cur):
            budget.tick()
            for e in g.incident(cur):
                if e in used or e == e2:
                    continue
                y = g.other_endpoint(e, cur)
                used.add(e)
                seq_e.append(e)
                seq_v.append(y)
                if dfs(y):
                    return True
                used.discard(e)
                seq_e.pop()
                seq_v.pop()
            if e2 in g.incident(cur):
                y = g.other_endpoint(e2, cur)
                seq_e.append(e2)
                seq_v.append(y)
                if interior_dominates(seq_v):
                    return True
                seq_e.pop()
                seq_v.pop()
            return False

        if dfs(b):
            return WalkCert("open_trail", list(seq_v), list(seq_e))
    return None


def _minimal_hitting_sets(family, limit=None):
    """Minimal hitting sets of a family of frozensets, smallest first."""
    family = sorted(set(family), key=lambda s: (len(s), sorted(map(repr, s))))
    results = set()

    def minimalize(chosen):
        chosen = set(chosen)
        for x in sorted(chosen, key=repr):
            trimmed = chosen - {x}
            if all(s & trimmed for s in family):
                chosen = trimmed
        return frozenset(chosen)

    def branch(i, chosen):
        if limit is not None and len(results) >= limit:
            return
        for j in range(i, len(family)):
            if not (family[j] & chosen):
                for x in sorted(family[j], key=repr):
                    branch(j + 1, chosen | {x})
                return
        results.add(minimalize(chosen))

    branch(0, frozenset())
    return [set(s) for s in sorted(results, key=lambda s: (len(s), sorted(map(repr, s))))]


def dominating_quasitrail(g: MultiGraph, whites, node_budget: int = DEFAULT_NODE_BUDGET) -> Optional[WalkCert]:
    """A dominating closed W-quasitrail of an incidence graph, or None.

    A quasitrail is a closed trail plus out-and-back detours at once-visited
    white vertices, so edge (u, v) gets dominated iff the underlying trail hits
    {u, v} or the neighborhood of a white endpoint.  The search runs over
    closed trails through minimal hitting sets of those per-edge requirements.
    """
    whites = set(whites)
    family = []
    for _, (u, v) in g.edge_items():
        s = {u, v}
        for x in (u, v):
            if x in whites:
                s |= g.neighbors(x)
        family.append(frozenset(s))
    if not family:
        return trivial_closed_trail(min(g.vertices, key=repr)) if g.n else None

    for S in _minimal_hitting_sets(family):
        cert = closed_trail_through(g, S, node_budget=node_budget)
        if cert is None:
            continue
        visited = cert.visited()
        extra = sorted((w for w in whites - visited if g.neighbors(w) & visited), key=repr)
        base = WalkCert("quasitrail", list(cert.vertices), list(cert.edges))
        anchors = {w: min(g.neighbors(w) & visited, key=repr) for w in extra}
        walk = extend_with_detours(g, base, extra, anchors)
        if not dominated_by_vertices(g, set(walk.vertices)):
            continue
        return walk
    return None
