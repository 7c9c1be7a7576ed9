"""Exact minimum dominating sets and edge dominating sets, with witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .multigraph import MultiGraph


@dataclass
class DominationWitness:
    kind: str      # "vertex" | "edge"
    members: set
    size: int


def is_dominating_set(g: MultiGraph, s) -> bool:
    """Every vertex is in s or adjacent to a vertex of s."""
    s = set(s)
    return all(v in s or g.neighbors(v) & s for v in g.vertices)


def dominated_edges(h: MultiGraph, s) -> set:
    """Edge ids with at least one endpoint in s."""
    s = set(s)
    return {e for e, (u, v) in h.edge_items() if u in s or v in s}


def domination_number(g: MultiGraph) -> tuple[int, DominationWitness]:
    """Exact minimum dominating set, smallest lexicographic witness among minima."""
    if g.n == 0:
        raise ValueError("domination number of an empty graph is undefined")
    verts = sorted(g.vertices, key=repr)
    upper = len(_greedy_dominating(g))
    for k in range(1, upper + 1):
        for cand in combinations(verts, k):
            if is_dominating_set(g, cand):
                return k, DominationWitness("vertex", set(cand), k)
    raise AssertionError("the full vertex set always dominates")


def _greedy_dominating(g: MultiGraph) -> set:
    undominated = set(g.vertices)
    chosen = set()
    while undominated:
        v = max(sorted(g.vertices, key=repr),
                key=lambda x: len(({x} | g.neighbors(x)) & undominated))
        chosen.add(v)
        undominated -= {v} | g.neighbors(v)
    return chosen


def edge_dominates(h: MultiGraph, d) -> bool:
    """Every edge is in d or shares an endpoint with an edge of d."""
    touched = set()
    for e in d:
        touched.update(h.endpoints(e))
    return all(e in d or u in touched or v in touched for e, (u, v) in h.edge_items())


def edge_domination_number(h: MultiGraph) -> tuple[int, DominationWitness]:
    """Exact minimum edge dominating set."""
    if h.m == 0:
        raise ValueError("edge domination number needs at least one edge")
    eids = h.edge_ids()
    upper = len(_greedy_edge_dominating(h))
    for k in range(1, upper + 1):
        for cand in combinations(eids, k):
            if edge_dominates(h, set(cand)):
                return k, DominationWitness("edge", set(cand), k)
    raise AssertionError("the full edge set always dominates")


def _greedy_edge_dominating(h: MultiGraph) -> set:
    undominated = set(h.edge_ids())
    chosen = set()
    while undominated:

        def gain(e):
            u, v = h.endpoints(e)
            cover = {f for f in h.incident(u)} | {f for f in h.incident(v)} | {e}
            return len(cover & undominated)

        e = max(h.edge_ids(), key=gain)
        chosen.add(e)
        u, v = h.endpoints(e)
        undominated -= set(h.incident(u)) | set(h.incident(v)) | {e}
    return chosen
