"""Walk certificates: alternating vertex/edge sequences with validity checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .multigraph import MultiGraph


@dataclass
class WalkCert:
    """v0, e0, v1, ..., e_{k-1}, v_k as parallel lists (len(vertices) = len(edges)+1).

    kind is one of cycle, path, closed_trail, open_trail, quasitrail.
    A trivial closed trail is a single vertex with no edges.
    """
    kind: str
    vertices: list = field(default_factory=list)
    edges: list = field(default_factory=list)

    @property
    def is_trivial(self) -> bool:
        return not self.edges

    def visited(self) -> set:
        return set(self.vertices)

    def edge_use(self) -> dict:
        use = {}
        for e in self.edges:
            use[e] = use.get(e, 0) + 1
        return use

    def validate(self, g: MultiGraph) -> bool:
        """Incidence consistency plus the per-kind constraints."""
        if len(self.vertices) != len(self.edges) + 1 or not self.vertices:
            return False
        for v in self.vertices:
            if not g.has_vertex(v):
                return False
        for i, e in enumerate(self.edges):
            u, v = self.vertices[i], self.vertices[i + 1]
            ends = set(g.endpoints(e))
            if u == v:
                if ends != {u}:
                    return False
            elif ends != {u, v}:
                return False
        closed = self.vertices[0] == self.vertices[-1]
        use = self.edge_use()
        if self.kind in ("cycle", "closed_trail"):
            if not closed:
                return False
        if self.kind in ("cycle", "path", "closed_trail", "open_trail"):
            if any(c > 1 for c in use.values()):
                return False
        if self.kind == "quasitrail":
            if not closed or any(c > 2 for c in use.values()):
                return False
        if self.kind == "cycle":
            interior = self.vertices[:-1]
            if len(set(interior)) != len(interior) or len(interior) < 3:
                return False
        if self.kind == "path":
            if closed or len(set(self.vertices)) != len(self.vertices):
                return False
        return True

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices), "edges": list(self.edges)}

    @classmethod
    def from_json(cls, data: dict) -> "WalkCert":
        return cls(data["kind"], list(data["vertices"]), list(data["edges"]))


def trivial_closed_trail(v) -> WalkCert:
    return WalkCert("closed_trail", [v], [])


def dominated_by_vertices(g: MultiGraph, vertex_set) -> bool:
    """Every edge of g has at least one endpoint in vertex_set."""
    vs = set(vertex_set)
    return all(u in vs or v in vs for _, (u, v) in g.edge_items())


def validate_quasitrail(g: MultiGraph, whites, walk: WalkCert) -> bool:
    """Closed walk, each edge at most twice; a doubly used edge must pivot at a
    once-visited white endvertex whose predecessor and successor edge it is."""
    if len(walk.vertices) != len(walk.edges) + 1:
        return False
    if walk.vertices[0] != walk.vertices[-1]:
        return False
    if walk.is_trivial:
        return g.has_vertex(walk.vertices[0])
    for i, e in enumerate(walk.edges):
        u, v = walk.vertices[i], walk.vertices[i + 1]
        ends = set(g.endpoints(e))
        if (u == v and ends != {u}) or (u != v and ends != {u, v}):
            return False
    whites = set(whites)
    k = len(walk.edges)
    cyc_vertices = walk.vertices[:-1]
    visit_count = {}
    for v in cyc_vertices:
        visit_count[v] = visit_count.get(v, 0) + 1
    use = walk.edge_use()
    if any(c > 2 for c in use.values()):
        return False
    for e, c in use.items():
        if c != 2:
            continue
        ok = False
        for w in set(g.endpoints(e)):
            if w not in whites or visit_count.get(w, 0) != 1:
                continue
            i = cyc_vertices.index(w)
            pred = walk.edges[(i - 1) % k]
            succ = walk.edges[i] if i < k else walk.edges[0]
            if pred == e and succ == e:
                ok = True
                break
        if not ok:
            return False
    return True


def extend_with_detours(g: MultiGraph, walk: WalkCert, targets, anchors: dict) -> WalkCert:
    """Insert an out-and-back detour anchor -> w -> anchor for each target w.

    anchors maps each target to a vertex already on the walk and adjacent to it.
    """
    verts = list(walk.vertices)
    edges = list(walk.edges)
    for w in targets:
        if w in verts:
            raise ValueError(f"target {w} already visited")
        z = anchors[w]
        if z not in verts:
            raise ValueError(f"anchor {z} does not occur on the walk")
        between = g.edges_between(z, w)
        if not between:
            raise ValueError(f"anchor {z} not adjacent to target {w}")
        e = min(between)
        i = verts.index(z)
        verts[i:i + 1] = [z, w, z]
        edges[i:i] = [e, e]
    return WalkCert("quasitrail", verts, edges)
