"""Rank-3 hypergraphs, black/white incidence graphs, the degree-2 white
reduction, the essentialization surgery, and clique coverings with bounded
per-vertex membership.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import SizeBoundExceeded, StructuralViolation
from .multigraph import MultiGraph
from .reduction import ReductionTrace
from .structure import is_essentially_k_edge_connected, nontrivial_component_count


class Hypergraph3:
    """Vertices plus a multiset of hyperedges of size 2 or 3."""

    __slots__ = ("vertices", "hyperedges")

    def __init__(self, vertices, hyperedges):
        self.vertices = tuple(vertices)
        vset = set(self.vertices)
        self.hyperedges = [frozenset(e) for e in hyperedges]
        for e in self.hyperedges:
            if len(e) not in (2, 3):
                raise ValueError(f"hyperedge {sorted(e, key=repr)} has size {len(e)}; only 2 or 3 allowed")
            if not e <= vset:
                raise ValueError(f"hyperedge {sorted(e, key=repr)} uses undeclared vertices")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.hyperedges)

    def rank(self) -> int:
        return max((len(e) for e in self.hyperedges), default=0)

    def __repr__(self):
        return f"Hypergraph3(n={self.n}, m={self.m})"

    @classmethod
    def from_graph(cls, g: MultiGraph) -> "Hypergraph3":
        """View a loopless multigraph as a hypergraph of 2-edges."""
        if any(g.is_loop(e) for e in g.edge_ids()):
            raise ValueError("loops have no hypergraph counterpart here")
        return cls(g.vertices, [frozenset(g.endpoints(e)) for e in g.edge_ids()])


def parse_hypergraph(text: str) -> Hypergraph3:
    """First non-comment line: n.  Then one line per hyperedge (2 or 3 ids)."""
    lines = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((ln, line))
    if not lines:
        raise ValueError("empty hypergraph description")
    ln0, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise ValueError(f"line {ln0}: expected vertex count") from None
    hyperedges = []
    for ln, line in lines[1:]:
        try:
            ids = [int(t) for t in line.split()]
        except ValueError:
            raise ValueError(f"line {ln}: expected integer vertex ids") from None
        if any(not 0 <= i < n for i in ids):
            raise ValueError(f"line {ln}: vertex id out of range")
        hyperedges.append(ids)
    return Hypergraph3(range(n), hyperedges)


def format_hypergraph(hg: Hypergraph3) -> str:
    idx = {v: i for i, v in enumerate(hg.vertices)}
    out = [str(hg.n)]
    for e in hg.hyperedges:
        out.append(" ".join(str(idx[v]) for v in sorted(e, key=repr)))
    return "\n".join(out) + "\n"


@dataclass
class IncidenceGraph:
    """Bipartite-by-color multigraph: black vertices are hypergraph vertices,
    each white vertex stands for one hyperedge and joins its members."""
    graph: MultiGraph
    blacks: set
    whites: set
    white_for: dict  # hyperedge index -> white vertex id

    def colors(self) -> dict:
        return {v: (1 if v in self.whites else 0) for v in self.graph.vertices}


def incidence_graph(hg: Hypergraph3) -> IncidenceGraph:
    g = MultiGraph(hg.vertices)
    blacks = set(hg.vertices)
    whites = set()
    white_for = {}
    for i, e in enumerate(hg.hyperedges):
        w = g.fresh_vertex_id()
        g = g.with_vertex(w, label="white")
        whites.add(w)
        white_for[i] = w
        for v in sorted(e, key=repr):
            g = g.with_edge(w, v)
    return IncidenceGraph(g, blacks, whites, white_for)


@dataclass
class ReducedIncidence:
    """Incidence graph with every degree-2 white vertex suppressed."""
    graph: MultiGraph
    trace: ReductionTrace          # suppress ops only; edge_map IG-edge -> reduced edge
    edge_for: dict                 # 2-edge hyperedge index -> restored edge id
    white_for: dict                # 3-hyperedge index -> surviving white vertex


def reduce_incidence(ig: IncidenceGraph) -> ReducedIncidence:
    cur = ig.graph
    trace = ReductionTrace(edge_map={e: e for e in cur.edge_ids()})
    rep = dict(trace.edge_map)
    edge_for = {}
    for i in sorted(ig.white_for):
        w = ig.white_for[i]
        if cur.degree(w) != 2:
            continue
        a, b = cur.incident(w)
        x = cur.other_endpoint(a, w)
        y = cur.other_endpoint(b, w)
        nxt = cur.without_vertex(w)
        c = nxt.fresh_edge_id()
        cur = nxt.with_edge(x, y, eid=c)
        trace.ops.append(("suppress", w, (a, x), (b, y), c))
        for e, r in rep.items():
            if r in (a, b):
                rep[e] = c
        edge_for[i] = c
    trace.edge_map = rep
    trace.vertex_map = {v: v for v in cur.vertices}
    trace.result = cur
    white_for = {i: w for i, w in ig.white_for.items() if cur.has_vertex(w)}
    return ReducedIncidence(cur, trace, edge_for, white_for)


def hyperedge_of_edges(red: ReducedIncidence) -> dict:
    """Map each edge of the reduced incidence graph to its hyperedge index."""
    white_owner = {w: i for i, w in red.white_for.items()}
    out = {}
    for e, (u, v) in red.graph.edge_items():
        if u in white_owner:
            out[e] = white_owner[u]
        elif v in white_owner:
            out[e] = white_owner[v]
    for i, e in red.edge_for.items():
        out[e] = i
    return out


@dataclass
class SurgeryTrace:
    """Record of the iterated small-cut surgery.

    rounds entries: (cut edge set, deleted vertex set, (v1, v2), added edge id
    or None, e0 edge id).  edge_remap maps every removed edge to its surviving
    stand-in e0 in the final graph (chains resolved).
    """
    rounds: list = field(default_factory=list)
    edge_remap: dict = field(default_factory=dict)
    result: MultiGraph = None


def essentialize(m: MultiGraph, edge_hyperedge: dict) -> tuple[MultiGraph, SurgeryTrace]:
    """Repeatedly remove a side of a sub-3 essential cut whose internal edges all
    belong to the cut's own hyperedges, reattaching with a fresh edge.

    `edge_hyperedge` maps edges of m to hyperedge indices.  Raises
    StructuralViolation when no side qualifies (the caller's 3-connectivity
    hypothesis failed).
    """
    cur = m
    owner = dict(edge_hyperedge)
    trace = SurgeryTrace()
    remap = {}

    while True:
        if cur.m < 4:
            break
        ok, cut = is_essentially_k_edge_connected(cur, 3)
        if ok:
            break
        comps = [c for c in cur.without_edges(cut).components()
                 if cur.induced(c).m >= 1]
        cut_owners = {owner[e] for e in cut if e in owner}

        def qualifies(side):
            sub = cur.induced(side)
            return all(owner.get(e) in cut_owners for e in sub.edge_ids())

        sides = [c for c in comps if qualifies(c)]
        if not sides:
            raise StructuralViolation("no deletable side for a small essential cut",
                                      witness=set(cut))
        s1 = min(sides, key=lambda c: (len(c), sorted(map(repr, c))))
        attach = sorted({v for e in cut for v in cur.endpoints(e) if v not in s1},
                        key=repr)
        if not 1 <= len(attach) <= 2:
            raise StructuralViolation("cut does not leave exactly one or two attachment vertices",
                                      witness=set(cut))
        nxt = cur.induced(set(cur.vertices) - set(s1))
        removed = set(cur.edge_ids()) - set(nxt.edge_ids())
        if len(attach) == 2 and attach[0] != attach[1]:
            v1, v2 = attach
            added = nxt.fresh_edge_id()
            nxt = nxt.with_edge(v1, v2, eid=added)
            e0 = added
        else:
            v1 = v2 = attach[0]
            added = None
            if not nxt.incident(v1):
                raise StructuralViolation("attachment vertex lost all edges",
                                          witness=set(cut))
            e0 = min(nxt.incident(v1))
        owner = {e: i for e, i in owner.items() if nxt.has_edge_id(e)}
        if added is not None:
            owner[added] = min(cut_owners) if cut_owners else -1
        for e in removed:
            remap[e] = e0
        trace.rounds.append((set(cut), set(s1), (v1, v2), added, e0))
        if not nxt.is_connected():
            raise StructuralViolation("surgery disconnected the graph",
                                      witness=set(cut))
        cur = nxt

    # resolve chains: a stand-in removed by a later round forwards again
    def resolve(e):
        seen = set()
        while e in remap and e not in seen:
            seen.add(e)
            e = remap[e]
        return e

    trace.edge_remap = {e: resolve(e) for e in remap}
    trace.result = cur
    return cur, trace


def krausz_cover(g: MultiGraph, r: int, size_bound: int = 12):
    """Cover all edges and vertices of a simple graph by cliques with every
    vertex in at most r cliques.  Returns (clique list, Hypergraph3 | None)
    or None when no cover exists (complete search).
    """
    g.require_simple()
    if g.n > size_bound:
        raise SizeBoundExceeded(f"clique-cover search limited to {size_bound} vertices")
    if r < 1:
        raise ValueError("r must be >= 1")
    adj = {v: g.neighbors(v) for v in g.vertices}
    pairs = sorted((frozenset(g.endpoints(e)) for e in g.edge_ids()),
                   key=lambda p: sorted(map(repr, p)))
    membership = {v: 0 for v in g.vertices}
    covered = set()
    chosen = []

    def cliques_through(u, v):
        common = sorted(adj[u] & adj[v], key=repr)
        subs = [set()]
        for x in common:
            subs += [s | {x} for s in subs if all(g.adjacent(x, y) for y in s)]
        out = [frozenset({u, v} | s) for s in subs]
        out.sort(key=lambda c: (-len(c), sorted(map(repr, c))))
        return out

    def solve():
        pair = next((p for p in pairs if p not in covered), None)
        if pair is None:
            return True
        u, v = sorted(pair, key=repr)
        for cl in cliques_through(u, v):
            if any(membership[x] >= r for x in cl):
                continue
            newly = {frozenset((a, b)) for a in cl for b in cl if a != b} - covered
            for x in cl:
                membership[x] += 1
            covered.update(newly)
            chosen.append(cl)
            if solve():
                return True
            chosen.pop()
            covered.difference_update(newly)
            for x in cl:
                membership[x] -= 1
        return False

    if not solve():
        return None
    for v in sorted(g.vertices, key=repr):
        if membership[v] == 0:
            chosen.append(frozenset((v,)))
            membership[v] = 1

    hyper = _cover_to_hypergraph(g, chosen) if r == 3 else None
    return list(chosen), hyper


def _cover_to_hypergraph(g: MultiGraph, cliques) -> Hypergraph3:
    """Cliques become hypergraph vertices; each graph vertex becomes the
    hyperedge of the cliques containing it, padded with a private vertex when
    it lies in a single clique."""
    hv = list(range(len(cliques)))
    hyperedges = []
    next_pad = len(cliques)
    for v in sorted(g.vertices, key=repr):
        mine = [i for i, cl in enumerate(cliques) if v in cl]
        if len(mine) == 1:
            hv.append(next_pad)
            mine.append(next_pad)
            next_pad += 1
        hyperedges.append(mine)
    return Hypergraph3(hv, hyperedges)
