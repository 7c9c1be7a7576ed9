"""Line graphs of multigraphs and 3-hypergraphs, and the normalized preimage.

The preimage search covers the edges of G by cliques with each vertex in at
most two of them (overlapping cliques yield parallel preimage edges), then pins
the simplicial <-> pendant normalization that makes the preimage unique up to
isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .canonical import is_isomorphic
from .errors import NotLineGraph
from .multigraph import MultiGraph
from .structure import find_induced_claw


@dataclass
class LineCorrespondence:
    """Bijection between edges of H and vertices of L(H)."""
    forward: dict   # edge of H -> vertex of L(H)
    backward: dict  # vertex of L(H) -> edge of H


def line_graph(h: MultiGraph) -> tuple[MultiGraph, LineCorrespondence]:
    """One vertex per edge of H; adjacency iff the edges share an endpoint.

    Parallel edges of H give distinct adjacent vertices.
    """
    if h.m == 0:
        raise ValueError("line graph of an edgeless multigraph is undefined here")
    eids = h.edge_ids()
    g = MultiGraph(eids)
    for i, e in enumerate(eids):
        ue = set(h.endpoints(e))
        for f in eids[i + 1:]:
            if ue & set(h.endpoints(f)):
                g = g.with_edge(e, f)
    corr = LineCorrespondence({e: e for e in eids}, {e: e for e in eids})
    return g, corr


def line_graph_h3(hg) -> tuple[MultiGraph, dict]:
    """Line graph of a rank-3 hypergraph: one vertex per hyperedge, adjacency
    iff the vertex sets intersect.  Returns (graph, vertex -> hyperedge index map).
    """
    hyperedges = hg.hyperedges
    if not hyperedges:
        raise ValueError("line graph of a hypergraph without hyperedges is undefined here")
    ids = list(range(len(hyperedges)))
    g = MultiGraph(ids)
    for i in ids:
        for j in ids[i + 1:]:
            if set(hyperedges[i]) & set(hyperedges[j]):
                g = g.with_edge(i, j)
    return g, {i: hyperedges[i] for i in ids}


def simplicial_vertices(g: MultiGraph) -> set:
    """Vertices whose neighborhoods induce complete graphs."""
    g.require_simple()
    out = set()
    for v in g.vertices:
        nbrs = sorted(g.neighbors(v))
        if all(g.adjacent(a, b) for i, a in enumerate(nbrs) for b in nbrs[i + 1:]):
            out.add(v)
    return out


def preimage(g: MultiGraph, _correspondence_out: Optional[dict] = None) -> MultiGraph:
    """The unique multigraph H with L(H) = G and simplicial <-> pendant.

    Raises NotLineGraph when no multigraph preimage exists.  When
    `_correspondence_out` is given it is filled with G-vertex -> H-edge-id.
    """
    g.require_simple()
    if not g.is_connected():
        raise ValueError("preimage requires a connected graph")
    claw = find_induced_claw(g)
    if claw is not None:
        raise NotLineGraph("contains an induced claw", obstruction=claw)
    cliques = _krausz_partition(g)
    if cliques is None:
        raise NotLineGraph("edges admit no clique cover with vertex budget 2")
    return _assemble_preimage(g, cliques, _correspondence_out)


def _krausz_partition(g: MultiGraph) -> Optional[list]:
    """Cover E(G) by cliques, every vertex in <= 2 of them and every
    simplicial vertex in exactly one.  Isolated vertices get singleton cliques.
    """
    simplicial = simplicial_vertices(g)
    adj = {v: g.neighbors(v) for v in g.vertices}
    edge_of = {}
    for e, (u, v) in g.edge_items():
        edge_of[frozenset((u, v))] = e
    all_pairs = sorted(edge_of, key=lambda p: edge_of[p])
    membership = {v: 0 for v in g.vertices}
    assigned = set()
    chosen = []

    def candidate_cliques(u, v):
        if u in simplicial or v in simplicial:
            s = u if u in simplicial else v
            cand = {s} | adj[s]
            if _is_clique(g, cand):
                return [frozenset(cand)]
            return []
        common = sorted(adj[u] & adj[v])
        out = []
        for sub in _clique_subsets(g, common):
            out.append(frozenset({u, v} | sub))
        out.sort(key=lambda c: (-len(c), sorted(map(repr, c))))
        return out

    def usable(cl):
        # cliques may overlap (shared pairs become parallel preimage edges);
        # only the per-vertex budget constrains the choice
        return all(membership[x] < (1 if x in simplicial else 2) for x in cl)

    def cover(cl):
        pairs = [frozenset((a, b)) for i, a in enumerate(sorted(cl)) for b in sorted(cl)[i + 1:]]
        newly = [p for p in pairs if p not in assigned]
        for x in cl:
            membership[x] += 1
        assigned.update(newly)
        chosen.append(cl)
        return newly

    def uncover(cl, newly):
        for x in cl:
            membership[x] -= 1
        assigned.difference_update(newly)
        chosen.pop()

    def solve():
        pair = next((p for p in all_pairs if p not in assigned), None)
        if pair is None:
            return True
        u, v = sorted(pair)
        for cl in candidate_cliques(u, v):
            if not usable(cl):
                continue
            pairs = cover(cl)
            if solve():
                return True
            uncover(cl, pairs)
        return False

    if not solve():
        return None
    for v in sorted(g.vertices):
        if membership[v] == 0:
            chosen.append(frozenset((v,)))
    return list(chosen)


def _is_clique(g, vs):
    vs = sorted(vs)
    return all(g.adjacent(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


def _clique_subsets(g, pool):
    """All subsets of `pool` that induce cliques (pool is small in practice)."""
    out = [set()]
    for x in pool:
        out += [s | {x} for s in out if all(g.adjacent(x, y) for y in s)]
    return out


def _assemble_preimage(g, cliques, correspondence_out=None):
    """H: one vertex per clique plus a pendant leaf for each singly-covered
    G-vertex; each G-vertex becomes the edge joining its cliques."""
    clique_ids = {cl: i for i, cl in enumerate(sorted(cliques, key=lambda c: sorted(map(repr, c))))}
    h = MultiGraph(sorted(clique_ids.values()))
    next_v = len(clique_ids)
    for u in sorted(g.vertices):
        mine = sorted(i for cl, i in clique_ids.items() if u in cl)
        if len(mine) == 2:
            h = h.with_edge(mine[0], mine[1], eid=u)
        elif len(mine) == 1:
            h = h.with_vertex(next_v, label="pendant")
            h = h.with_edge(mine[0], next_v, eid=u)
            next_v += 1
        else:
            raise AssertionError("every vertex lies in 1 or 2 cliques by construction")
        if correspondence_out is not None:
            correspondence_out[u] = u
    return h


def verify_preimage(g: MultiGraph, h: MultiGraph) -> bool:
    """Round-trip L(h) isomorphic to g and simplicial <-> pendant."""
    lg, _ = line_graph(h)
    if not is_isomorphic(lg, g):
        return False
    simp = simplicial_vertices(g)
    pendant_edges = {e for e, (u, v) in h.edge_items()
                    if h.degree(u) == 1 or h.degree(v) == 1}
    # vertex ids of L(h) are edge ids of h; g may be labeled differently, so
    # compare via the canonical invariant: counts must match
    return len(simp) == len(pendant_edges)
