"""Local-completion closure of claw-free graphs and the multigraph-closedness test."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotLineGraph
from .linegraph import preimage
from .multigraph import MultiGraph
from .structure import diamond, find_induced_claw, find_subgraph, multitriangle, triple_edge


@dataclass
class ClosureTrace:
    """Ordered record of local completions: (vertex, edges added as endpoint pairs)."""
    steps: list = field(default_factory=list)
    result: MultiGraph = None


def eligible_vertices(g: MultiGraph) -> set:
    """Vertices whose open neighborhood induces a connected, noncomplete graph."""
    g.require_simple()
    out = set()
    for v in g.vertices:
        nbrs = g.neighbors(v)
        if len(nbrs) < 2:
            continue
        sub = g.induced(nbrs)
        if sub.is_connected() and sub.m < len(nbrs) * (len(nbrs) - 1) // 2:
            out.add(v)
    return out


def local_completion(g: MultiGraph, v) -> tuple[MultiGraph, list]:
    """Add every missing edge inside N(v); returns (graph, added endpoint pairs)."""
    nbrs = sorted(g.neighbors(v))
    added = []
    out = g
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            if not out.adjacent(a, b):
                out = out.with_edge(a, b)
                added.append((a, b))
    return out, added


def ryjacek_closure(g: MultiGraph, reverse: bool = False) -> tuple[MultiGraph, ClosureTrace]:
    """Fixpoint of local completion at eligible vertices (lowest id first;
    highest first with reverse=True — the result is the same either way).

    Defined for claw-free inputs; the result has the same vertex set and is
    claw-free.
    """
    claw = find_induced_claw(g)
    if claw is not None:
        raise ValueError(f"closure requires a claw-free graph; found claw {claw}")
    trace = ClosureTrace()
    cur = g
    pick = max if reverse else min
    while True:
        elig = eligible_vertices(cur)
        if not elig:
            break
        v = pick(elig, key=repr)
        cur, added = local_completion(cur, v)
        trace.steps.append((v, added))
    trace.result = cur
    return cur, trace


def is_m_closed(g: MultiGraph):
    """(True, None) if g is a line graph of a multigraph whose preimage avoids the
    three forbidden substructures; otherwise (False, reason).
    """
    try:
        h = preimage(g)
    except NotLineGraph as exc:
        return False, ("not_line_graph", exc.obstruction)
    for name, pattern in (("diamond", diamond()),
                          ("multitriangle", multitriangle()),
                          ("triple_edge", triple_edge())):
        emb = find_subgraph(h, pattern)
        if emb is not None:
            return False, (name, emb)
    return True, None
