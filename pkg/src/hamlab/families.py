"""Generators and validators for the two exceptional decoration families
(Petersen-based and Wagner-based) and the small tripartite sharpness graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .canonical import is_isomorphic
from .contraction import petersen, wagner
from .domination import edge_domination_number
from .multigraph import MultiGraph, attach_pendant, subdivide_edge


@dataclass
class DecorationConfig:
    """Per-vertex decoration plan over a base graph.

    pendants: vertex -> number of single pendant edges;
    double_pendants: vertex -> number of pendant double edges (Wagner family only);
    subdivide: base edge ids to subdivide once;
    double_to_subdivision: base edge id -> endpoint v; after subdividing that
    edge, v gets a second parallel edge to the new subdivision vertex
    (Wagner family only).
    """
    pendants: dict = field(default_factory=dict)
    double_pendants: dict = field(default_factory=dict)
    subdivide: set = field(default_factory=set)
    double_to_subdivision: dict = field(default_factory=dict)


def _modified_vertices(base: MultiGraph, config: DecorationConfig) -> set:
    mod = {v for v, c in config.pendants.items() if c >= 1}
    mod |= {v for v, c in config.double_pendants.items() if c >= 1}
    for e in config.subdivide:
        mod.update(base.endpoints(e))
    return mod


def _apply_decoration(base: MultiGraph, config: DecorationConfig,
                      allow_doubles: bool) -> MultiGraph:
    uncovered = set(base.vertices) - _modified_vertices(base, config)
    if uncovered:
        raise ValueError(f"vertices left unmodified: {sorted(uncovered, key=repr)}")
    if not allow_doubles and (config.double_pendants or config.double_to_subdivision):
        raise ValueError("double-edge decorations are only allowed over the Wagner base")
    if not set(config.double_to_subdivision) <= set(config.subdivide):
        raise ValueError("doubled subdivision references an edge that is not subdivided")
    g = base
    sub_vertex = {}
    for e in sorted(config.subdivide):
        g, s = subdivide_edge(g, e)
        sub_vertex[e] = s
    for e, v in sorted(config.double_to_subdivision.items()):
        if v not in base.endpoints(e):
            raise ValueError(f"vertex {v!r} is not an endpoint of edge {e!r}")
        g = g.with_edge(v, sub_vertex[e])
    for v in sorted(config.pendants, key=repr):
        for _ in range(config.pendants[v]):
            g, _p = attach_pendant(g, v, multiplicity=1)
    for v in sorted(config.double_pendants, key=repr):
        for _ in range(config.double_pendants[v]):
            g, _p = attach_pendant(g, v, multiplicity=2)
    return g


def p_prime_member(config: DecorationConfig) -> MultiGraph:
    """Decorate the Petersen graph per config (pendants/subdivisions only)."""
    return _apply_decoration(petersen(), config, allow_doubles=False)


def w_prime_member(config: DecorationConfig) -> MultiGraph:
    """Decorate the Wagner graph per config (doubles allowed)."""
    return _apply_decoration(wagner(), config, allow_doubles=True)


def _decoration_profile(h: MultiGraph, allow_doubles: bool):
    """Peel decorations off h: returns (stripped graph, per-vertex modification
    marks, None) or (None, None, reason) when a structure outside the allowed
    decoration vocabulary shows up."""
    cur = h
    pendant_support = []
    subdivided_now = set()  # current edge ids known to come from suppressed chains
    while True:
        leaf = next((v for v in sorted(cur.vertices, key=repr)
                     if cur.degree(v) == 1), None)
        if leaf is not None:
            e = cur.incident(leaf)[0]
            s = cur.other_endpoint(e, leaf)
            pendant_support.append(s)
            cur = cur.without_vertex(leaf)
            continue
        dbl_leaf = None
        for v in sorted(cur.vertices, key=repr):
            inc = cur.incident(v)
            if (cur.degree(v) == 2 and len(inc) == 2 and not cur.loops_at(v)
                    and cur.other_endpoint(inc[0], v) == cur.other_endpoint(inc[1], v)):
                dbl_leaf = v
                break
        if dbl_leaf is not None:
            if not allow_doubles:
                return None, None, "parallel edges are not part of this family"
            s = cur.other_endpoint(cur.incident(dbl_leaf)[0], dbl_leaf)
            pendant_support.append(s)
            cur = cur.without_vertex(dbl_leaf)
            continue
        doubled_chain = None
        for v in sorted(cur.vertices, key=repr):
            inc = cur.incident(v)
            if cur.degree(v) != 3 or cur.loops_at(v) or len(inc) != 3:
                continue
            nbr_counts = {}
            for e in inc:
                w = cur.other_endpoint(e, v)
                nbr_counts[w] = nbr_counts.get(w, 0) + 1
            doubles = [w for w, c in nbr_counts.items() if c == 2]
            if doubles:
                doubled_chain = (v, doubles[0])
                break
        if doubled_chain is not None:
            if not allow_doubles:
                return None, None, "parallel edges are not part of this family"
            v, w = doubled_chain
            drop = max(cur.edges_between(v, w))
            cur = cur.without_edge(drop)
            continue
        deg2 = next((v for v in sorted(cur.vertices, key=repr)
                     if cur.degree(v) == 2 and not cur.loops_at(v)
                     and len(set(cur.endpoints(cur.incident(v)[0])
                                 + cur.endpoints(cur.incident(v)[1]))) == 3), None)
        if deg2 is not None:
            a, b = cur.incident(deg2)
            x = cur.other_endpoint(a, deg2)
            y = cur.other_endpoint(b, deg2)
            nxt = cur.without_vertex(deg2)
            c = nxt.fresh_edge_id()
            nxt = nxt.with_edge(x, y, eid=c)
            subdivided_now -= {a, b}
            subdivided_now.add(c)
            cur = nxt
            continue
        break
    if any(cur.loops_at(v) for v in cur.vertices):
        return None, None, "reduction produced a loop; not a valid decoration"
    surviving = set(cur.vertices)
    if not set(pendant_support) <= surviving:
        return None, None, "pendant attached to a subdivision vertex"
    modified = set(pendant_support)
    for e in subdivided_now:
        modified.update(cur.endpoints(e))
    return cur, modified, None


def is_in_P_prime(h: MultiGraph):
    """(True, None) or (False, reason): Petersen base, only pendants and
    subdivisions, every base vertex modified, edge domination number <= 5."""
    return _family_check(h, petersen(), allow_doubles=False, gamma_bound=5)


def is_in_W_prime(h: MultiGraph):
    """(True, None) or (False, reason): Wagner base, pendants / double pendants /
    subdivisions / doubled subdivision edges, every base vertex modified,
    edge domination number <= 4."""
    return _family_check(h, wagner(), allow_doubles=True, gamma_bound=4)


def _family_check(h, base, allow_doubles, gamma_bound):
    stripped, modified, reason = _decoration_profile(h, allow_doubles)
    if reason is not None:
        return False, reason
    if not is_isomorphic(stripped, base):
        return False, "stripping the decorations does not leave the base graph"
    unmodified = set(stripped.vertices) - modified
    if unmodified:
        return False, f"base vertices left unmodified: {sorted(unmodified, key=repr)}"
    gamma, _w = edge_domination_number(h)
    if gamma > gamma_bound:
        return False, f"edge domination number {gamma} exceeds {gamma_bound}"
    return True, None


def _complete_multipartite(sizes) -> MultiGraph:
    parts = []
    nxt = 0
    for s in sizes:
        parts.append(list(range(nxt, nxt + s)))
        nxt += s
    pairs = []
    for i, p in enumerate(parts):
        for q in parts[i + 1:]:
            pairs.extend((a, b) for a in p for b in q)
    return MultiGraph.from_edges(nxt, pairs)


def k123() -> MultiGraph:
    """Complete tripartite graph with parts of sizes 1, 2, 3 (part ids 0 | 1,2 | 3,4,5)."""
    return _complete_multipartite((1, 2, 3))


def k113() -> MultiGraph:
    """Complete tripartite graph with parts of sizes 1, 1, 3 (part ids 0 | 1 | 2,3,4)."""
    return _complete_multipartite((1, 1, 3))


def blowup(base: str, k: int) -> MultiGraph:
    """Replace one vertex of the size-3 part by a k-clique joined to everything
    the vertex saw (the size-1 and size-2 parts); k = 1 returns the base."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if base == "k123":
        g = k123()
        red = 3
    elif base == "k113":
        g = k113()
        red = 2
    else:
        raise ValueError("base must be 'k123' or 'k113'")
    if k == 1:
        return g
    nbrs = sorted(g.neighbors(red))
    g = g.without_vertex(red)
    clique = []
    for _ in range(k):
        v = g.fresh_vertex_id()
        g = g.with_vertex(v)
        clique.append(v)
    for a, b in combinations(clique, 2):
        g = g.with_edge(a, b)
    for v in clique:
        for u in nbrs:
            g = g.with_edge(v, u)
    return g
