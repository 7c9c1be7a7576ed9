"""Labeled multigraph with stable integer ids for vertices and edges.

Parallel edges and loops are representable.  A loop contributes 2 to the
degree of its vertex and does not put the vertex into its own neighborhood.
Instances are treated as immutable: every transform returns a new graph and
preserves the ids of untouched vertices and edges.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .errors import NotSimple, UnknownEdge, UnknownVertex


class MultiGraph:
    __slots__ = ("_vertices", "_edges", "_adj", "_vlabels", "_elabels")

    def __init__(self, vertices=(), edges=None, vlabels=None, elabels=None):
        """`edges` maps edge id -> (u, v); endpoints must be declared vertices."""
        self._vertices = tuple(vertices)
        self._edges = dict(edges or {})
        self._vlabels = dict(vlabels or {})
        self._elabels = dict(elabels or {})
        vset = set(self._vertices)
        if len(vset) != len(self._vertices):
            raise ValueError("duplicate vertex ids")
        adj = {v: [] for v in self._vertices}
        for eid, (u, v) in self._edges.items():
            if u not in vset or v not in vset:
                raise UnknownVertex(f"edge {eid} endpoint not a declared vertex")
            adj[u].append(eid)
            if v != u:
                adj[v].append(eid)
        self._adj = {v: tuple(sorted(eids)) for v, eids in adj.items()}

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_edges(cls, n_or_vertices, pairs: Iterable[tuple[int, int]]) -> "MultiGraph":
        """Build from `range(n)` or an explicit vertex list plus endpoint pairs.

        Edge ids are assigned 0, 1, ... in iteration order.
        """
        if isinstance(n_or_vertices, int):
            vertices = range(n_or_vertices)
        else:
            vertices = n_or_vertices
        edges = {i: (u, v) for i, (u, v) in enumerate(pairs)}
        return cls(vertices, edges)

    @classmethod
    def simple_from_edges(cls, n_or_vertices, pairs) -> "MultiGraph":
        g = cls.from_edges(n_or_vertices, pairs)
        g.require_simple()
        return g

    # -- basic accessors ------------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def edge_ids(self) -> tuple:
        return tuple(sorted(self._edges))

    def edge_items(self):
        return [(eid, self._edges[eid]) for eid in sorted(self._edges)]

    def has_vertex(self, v) -> bool:
        return v in self._adj

    def has_edge_id(self, eid) -> bool:
        return eid in self._edges

    def endpoints(self, eid) -> tuple[int, int]:
        try:
            return self._edges[eid]
        except KeyError:
            raise UnknownEdge(f"no edge with id {eid!r}") from None

    def other_endpoint(self, eid, v) -> int:
        u, w = self.endpoints(eid)
        if v == u:
            return w
        if v == w:
            return u
        raise UnknownVertex(f"vertex {v} is not an endpoint of edge {eid}")

    def is_loop(self, eid) -> bool:
        u, v = self.endpoints(eid)
        return u == v

    def incident(self, v) -> tuple:
        """Incident edge ids in sorted order (a loop appears once)."""
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(f"no vertex with id {v!r}") from None

    def degree(self, v) -> int:
        return sum(2 if self.is_loop(e) else 1 for e in self.incident(v))

    def neighbors(self, v) -> set:
        """N(v): distinct adjacent vertices; a loop does not make v its own neighbor."""
        out = set()
        for e in self.incident(v):
            w = self.other_endpoint(e, v)
            if w != v:
                out.add(w)
        return out

    def edges_between(self, u, v) -> list:
        if u not in self._adj:
            raise UnknownVertex(f"no vertex with id {u!r}")
        return [e for e in self._adj[u] if set(self.endpoints(e)) == ({u, v} if u != v else {u})]

    def multiplicity(self, u, v) -> int:
        return len(self.edges_between(u, v))

    def adjacent(self, u, v) -> bool:
        return u != v and self.multiplicity(u, v) > 0

    def loops_at(self, v) -> list:
        return [e for e in self.incident(v) if self.is_loop(e)]

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self._edges.values():
            if u == v:
                return False
            key = frozenset((u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def require_simple(self):
        if not self.is_simple():
            raise NotSimple("operation requires a simple graph (no parallel edges, no loops)")

    # -- labels ---------------------------------------------------------------

    def vertex_label(self, v) -> Optional[str]:
        return self._vlabels.get(v)

    def edge_label(self, e) -> Optional[str]:
        return self._elabels.get(e)

    def vertex_labels(self) -> dict:
        return dict(self._vlabels)

    def with_vertex_label(self, v, label) -> "MultiGraph":
        self.incident(v)
        vl = dict(self._vlabels)
        vl[v] = label
        return MultiGraph(self._vertices, self._edges, vl, self._elabels)

    # -- fresh ids ------------------------------------------------------------

    def fresh_vertex_id(self) -> int:
        return max((v for v in self._vertices if isinstance(v, int)), default=-1) + 1

    def fresh_edge_id(self) -> int:
        return max((e for e in self._edges if isinstance(e, int)), default=-1) + 1

    # -- transforms (all return new graphs) -----------------------------------

    def with_vertex(self, v, label=None) -> "MultiGraph":
        if v in self._adj:
            raise ValueError(f"vertex id {v!r} already present")
        vl = dict(self._vlabels)
        if label is not None:
            vl[v] = label
        return MultiGraph(self._vertices + (v,), self._edges, vl, self._elabels)

    def with_edge(self, u, v, eid=None, label=None) -> "MultiGraph":
        if eid is None:
            eid = self.fresh_edge_id()
        if eid in self._edges:
            raise ValueError(f"edge id {eid!r} already present")
        for x in (u, v):
            if x not in self._adj:
                raise UnknownVertex(f"no vertex with id {x!r}")
        edges = dict(self._edges)
        edges[eid] = (u, v)
        el = dict(self._elabels)
        if label is not None:
            el[eid] = label
        return MultiGraph(self._vertices, edges, self._vlabels, el)

    def without_edge(self, eid) -> "MultiGraph":
        self.endpoints(eid)
        edges = dict(self._edges)
        del edges[eid]
        el = {e: l for e, l in self._elabels.items() if e != eid}
        return MultiGraph(self._vertices, edges, self._vlabels, el)

    def without_edges(self, eids) -> "MultiGraph":
        eids = set(eids)
        for e in eids:
            self.endpoints(e)
        edges = {e: uv for e, uv in self._edges.items() if e not in eids}
        el = {e: l for e, l in self._elabels.items() if e not in eids}
        return MultiGraph(self._vertices, edges, self._vlabels, el)

    def without_vertex(self, v) -> "MultiGraph":
        self.incident(v)
        drop = set(self.incident(v))
        edges = {e: uv for e, uv in self._edges.items() if e not in drop}
        vl = {u: l for u, l in self._vlabels.items() if u != v}
        el = {e: l for e, l in self._elabels.items() if e not in drop}
        return MultiGraph(tuple(u for u in self._vertices if u != v), edges, vl, el)

    def without_vertices(self, vs) -> "MultiGraph":
        g = self
        for v in vs:
            g = g.without_vertex(v)
        return g

    def induced(self, vs) -> "MultiGraph":
        vs = set(vs)
        edges = {e: (u, w) for e, (u, w) in self._edges.items() if u in vs and w in vs}
        vl = {u: l for u, l in self._vlabels.items() if u in vs}
        el = {e: l for e, l in self._elabels.items() if e in edges}
        return MultiGraph(tuple(u for u in self._vertices if u in vs), edges, vl, el)

    def relabeled(self, vmap: dict) -> "MultiGraph":
        """Apply a vertex bijection; edge ids are kept."""
        edges = {e: (vmap[u], vmap[v]) for e, (u, v) in self._edges.items()}
        vl = {vmap[u]: l for u, l in self._vlabels.items()}
        return MultiGraph(tuple(vmap[u] for u in self._vertices), edges, vl, self._elabels)

    # -- connectivity (plain BFS; witnesses live in structure.py) -------------

    def components(self) -> list[set]:
        seen = set()
        comps = []
        for s in self._vertices:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                for e in self._adj[x]:
                    y = self.other_endpoint(e, x)
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        stack.append(y)
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- misc -----------------------------------------------------------------

    def degree_sequence(self) -> tuple:
        return tuple(sorted(self.degree(v) for v in self._vertices))

    def __repr__(self):
        return f"MultiGraph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        """Label-level equality: same ids, same endpoint sets per edge."""
        if not isinstance(other, MultiGraph):
            return NotImplemented
        if set(self._vertices) != set(other._vertices):
            return False
        if set(self._edges) != set(other._edges):
            return False
        for e, (u, v) in self._edges.items():
            if {u, v} != set(other._edges[e]) and (u, v) != other._edges[e]:
                return False
        return True

    def __hash__(self):
        return hash((frozenset(self._vertices),
                     frozenset((e, frozenset((u, v))) for e, (u, v) in self._edges.items())))


def neighbors(g: MultiGraph, v) -> set:
    """Module-level alias for N_G(v)."""
    return g.neighbors(v)


def subdivide_edge(g: MultiGraph, eid) -> tuple[MultiGraph, int]:
    """Replace edge `eid` by a 2-edge path through a fresh vertex.

    The new vertex is labeled "subdivision".  Loops are rejected.
    Returns (new graph, new vertex id).
    """
    u, v = g.endpoints(eid)
    if u == v:
        raise ValueError("cannot subdivide a loop")
    s = g.fresh_vertex_id()
    out = g.without_edge(eid).with_vertex(s, label="subdivision")
    out = out.with_edge(u, s).with_edge(s, v)
    return out, s


def suppress_vertex(g: MultiGraph, v) -> MultiGraph:
    """Replace a degree-2 vertex and its two edges by one edge joining its neighbors.

    If the two neighbors coincide (v lay on a double edge) the result is a loop.
    """
    if g.loops_at(v):
        raise ValueError(f"vertex {v} carries a loop; suppression undefined")
    inc = g.incident(v)
    if g.degree(v) != 2:
        raise ValueError(f"vertex {v} has degree {g.degree(v)}, expected 2")
    a, b = inc
    x = g.other_endpoint(a, v)
    y = g.other_endpoint(b, v)
    out = g.without_vertex(v)
    return out.with_edge(x, y)


def attach_pendant(g: MultiGraph, v, multiplicity: int = 1) -> tuple[MultiGraph, int]:
    """Join a fresh vertex (labeled "pendant") to v by `multiplicity` parallel edges."""
    if multiplicity not in (1, 2):
        raise ValueError("pendant multiplicity must be 1 or 2")
    g.incident(v)
    p = g.fresh_vertex_id()
    out = g.with_vertex(p, label="pendant")
    for _ in range(multiplicity):
        out = out.with_edge(v, p)
    return out, p


# -- text edge-list format ----------------------------------------------------
# First line: `n m [multi]`.  Then one `u v [mult]` line per edge bundle,
# optional `label u name` lines, `#` comments.

def parse_edgelist(text: str) -> MultiGraph:
    lines = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((ln, line))
    if not lines:
        raise ValueError("empty edge list")
    ln0, header = lines[0]
    parts = header.split()
    if len(parts) < 2:
        raise ValueError(f"line {ln0}: header must be 'n m [multi]'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"line {ln0}: header must be 'n m [multi]'") from None
    g = MultiGraph.from_edges(n, [])
    labels = []
    edge_count = 0
    for ln, line in lines[1:]:
        parts = line.split()
        if parts[0] == "label":
            if len(parts) != 3:
                raise ValueError(f"line {ln}: expected 'label u name'")
            labels.append((ln, int(parts[1]), parts[2]))
            continue
        if len(parts) not in (2, 3):
            raise ValueError(f"line {ln}: expected 'u v [mult]'")
        try:
            u, v = int(parts[0]), int(parts[1])
            mult = int(parts[2]) if len(parts) == 3 else 1
        except ValueError:
            raise ValueError(f"line {ln}: expected integer 'u v [mult]'") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {ln}: endpoint out of range")
        for _ in range(mult):
            g = g.with_edge(u, v)
            edge_count += 1
    if edge_count != m:
        raise ValueError(f"header declared {m} edges, found {edge_count}")
    for ln, u, name in labels:
        if not g.has_vertex(u):
            raise ValueError(f"line {ln}: unknown vertex {u}")
        g = g.with_vertex_label(u, name)
    return g


def to_edgelist(g: MultiGraph) -> str:
    idx = {v: i for i, v in enumerate(g.vertices)}
    bundles = {}
    for _, (u, v) in g.edge_items():
        key = tuple(sorted((idx[u], idx[v])))
        bundles[key] = bundles.get(key, 0) + 1
    out = [f"{g.n} {g.m} multi"]
    for (u, v), mult in sorted(bundles.items()):
        out.append(f"{u} {v}" + (f" {mult}" if mult != 1 else ""))
    for v in g.vertices:
        if g.vertex_label(v):
            out.append(f"label {idx[v]} {g.vertex_label(v)}")
    return "\n".join(out) + "\n"


def to_dot(g: MultiGraph, name: str = "G") -> str:
    idx = {v: i for i, v in enumerate(g.vertices)}
    out = [f"graph {name} {{"]
    for v in g.vertices:
        label = g.vertex_label(v)
        attr = f' [label="{idx[v]}:{label}"]' if label else ""
        out.append(f"  v{idx[v]}{attr};")
    for _, (u, v) in g.edge_items():
        out.append(f"  v{idx[u]} -- v{idx[v]};")
    out.append("}")
    return "\n".join(out) + "\n"
