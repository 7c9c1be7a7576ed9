"""Core reduction of a multigraph (iterated pendant deletion + degree-2
suppression), its replayable trace with the edge-to-core map, trail lifting,
and the two-edge join-subdivision gadget.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .errors import DegenerateCore, UnknownEdge
from .multigraph import MultiGraph, subdivide_edge
from .walks import WalkCert


@dataclass
class ReductionTrace:
    """Replayable record of a core reduction.

    ops entries are tuples:
      ("suppress", v, (a, x), (b, y), c) — v suppressed; old edges a = vx and
        b = vy replaced by the new edge c = xy;
      ("pendant", p, leaf, support, d) — pendant edge p and its leaf removed;
        edges previously mapping to p re-map to d (the smallest-id other edge
        at the support at deletion time; None when no such edge remained).
    edge_map is total on the input edges; values are core edge ids (or None
    when the core retained no edges).  vertex_map injects surviving vertices.
    """
    ops: list = field(default_factory=list)
    edge_map: dict = field(default_factory=dict)
    vertex_map: dict = field(default_factory=dict)
    result: MultiGraph = None

    def to_json(self) -> dict:
        return {
            "ops": [list(op) for op in self.ops],
            "edge_map": {repr(k): v for k, v in self.edge_map.items()},
            "vertex_map": {repr(k): v for k, v in self.vertex_map.items()},
        }


def _pendant_edges(g: MultiGraph) -> list:
    return [e for e, (u, v) in g.edge_items() if g.degree(u) == 1 or g.degree(v) == 1]


def _suppressible(g: MultiGraph) -> list:
    return sorted(v for v in g.vertices
                  if g.degree(v) == 2 and not g.loops_at(v))


def core(h: MultiGraph, rng: Optional[random.Random] = None) -> tuple[MultiGraph, ReductionTrace]:
    """Fixpoint of deleting pendant edges and suppressing degree-2 vertices.

    Deterministic order (pendants first, lowest ids) unless `rng` is given, in
    which case each step picks a random applicable operation — the result is
    the same up to isomorphism either way.
    """
    if not h.is_connected():
        raise ValueError("core requires a connected multigraph")
    cur = h
    trace = ReductionTrace(edge_map={e: e for e in h.edge_ids()})
    rep = dict(trace.edge_map)  # original edge -> current edge id

    def remap(old, new):
        for e, r in rep.items():
            if r == old:
                rep[e] = new

    while True:
        pendants = _pendant_edges(cur)
        deg2 = _suppressible(cur)
        choices = [("pendant", p) for p in pendants] + [("suppress", v) for v in deg2]
        if not choices:
            break
        kind, x = rng.choice(choices) if rng is not None else choices[0]
        if kind == "pendant":
            u, v = cur.endpoints(x)
            if cur.degree(u) == 1 and cur.degree(v) == 1:
                support, leaf = min(u, v, key=repr), max(u, v, key=repr)
            elif cur.degree(u) == 1:
                leaf, support = u, v
            else:
                leaf, support = v, u
            others = [e for e in cur.incident(support) if e != x]
            d = min(others) if others else None
            cur = cur.without_edge(x).without_vertex(leaf)
            trace.ops.append(("pendant", x, leaf, support, d))
            remap(x, d)
        else:
            a, b = cur.incident(x)
            xa = cur.other_endpoint(a, x)
            xb = cur.other_endpoint(b, x)
            nxt = cur.without_vertex(x)
            c = nxt.fresh_edge_id()
            cur = nxt.with_edge(xa, xb, eid=c)
            trace.ops.append(("suppress", x, (a, xa), (b, xb), c))
            remap(a, c)
            remap(b, c)

    if cur.n == 1 and cur.m > 0:
        raise DegenerateCore("reduction collapsed to a single looped vertex",
                             partial_trace=trace)
    trace.edge_map = dict(rep)
    trace.vertex_map = {v: v for v in cur.vertices}
    trace.result = cur
    return cur, trace


def map_edge_to_core(trace: ReductionTrace, e):
    if e not in trace.edge_map:
        raise UnknownEdge(f"edge {e!r} is not in the reduction trace")
    return trace.edge_map[e]


def expand_trail(vertices: list, edges: list, ops: list) -> tuple[list, list]:
    """Undo suppress ops on a walk: each use of a merged edge c = xy is replaced
    by the 2-edge path x, a, v, b, y it stood for.  Pendant ops need no action
    (the walk never uses deleted edges)."""
    verts = list(vertices)
    eds = list(edges)
    for op in reversed(ops):
        if op[0] != "suppress":
            continue
        _, v, (a, x), (b, y), c = op
        i = 0
        while i < len(eds):
            if eds[i] != c:
                i += 1
                continue
            u, w = verts[i], verts[i + 1]
            if u == x and w == y:
                seg_e, seg_v = [a, b], [v]
            elif u == y and w == x:
                seg_e, seg_v = [b, a], [v]
            elif u == w == x == y:  # loop created by suppressing a doubled edge
                seg_e, seg_v = [a, b], [v]
            else:
                raise ValueError("walk inconsistent with the reduction trace")
            eds[i:i + 1] = seg_e
            verts[i + 1:i + 1] = seg_v
            i += len(seg_e)
    return verts, eds


def lift_core_trail(h: MultiGraph, trace: ReductionTrace, walk: WalkCert) -> WalkCert:
    """Closed trail in the core -> closed trail in h, restoring suppressed paths."""
    if trace.result is not None and not walk.validate(trace.result):
        raise ValueError("input walk is not a valid closed trail in the core")
    verts, eds = expand_trail(walk.vertices, walk.edges, trace.ops)
    lifted = WalkCert("closed_trail", verts, eds)
    if not lifted.validate(h):
        raise ValueError("lifted walk failed validation in the original graph")
    return lifted


def join_subdivision(m: MultiGraph, f1, f2) -> tuple[MultiGraph, int, dict]:
    """Subdivide two distinct edges and join the fresh vertices by a new edge.

    With f1 = f2 the graph is returned unchanged and f1 plays the joining
    role.  Returns (graph, joining edge id, provenance): provenance maps each
    subdivided input edge to {"vertex": s, "halves": (ea, eb)}.
    """
    m.endpoints(f1)
    m.endpoints(f2)
    if f1 == f2:
        return m, f1, {}
    g1, s1 = subdivide_edge(m, f1)
    halves1 = tuple(sorted(g1.incident(s1)))
    g2, s2 = subdivide_edge(g1, f2)
    halves2 = tuple(sorted(g2.incident(s2)))
    tilde = g2.fresh_edge_id()
    out = g2.with_edge(s1, s2, eid=tilde)
    prov = {f1: {"vertex": s1, "halves": halves1},
            f2: {"vertex": s2, "halves": halves2}}
    return out, tilde, prov
