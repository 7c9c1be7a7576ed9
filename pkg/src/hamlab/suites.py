"""Exhaustive verification suites over enumerated populations.

Each suite returns a SuiteResult; `violations` stays empty when the library's
searches agree with the structural predictions on the whole population.  The
CLI and the acceptance tests share these implementations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .atlas import EnumSpec, _triangle_free, enumerate_3hypergraphs, enumerate_graphs, enumerate_multigraphs
from .canonical import canonical_form, is_isomorphic
from .closure import ryjacek_closure
from .contraction import find_contraction, petersen, wagner
from .domination import domination_number, edge_domination_number
from .errors import DegenerateCore, HamlabError, Indeterminate, NotLineGraph
from .families import is_in_P_prime
from .hamilton import (closed_trail_through, dominating_closed_trail,
                       hamilton_cycle, hamilton_path, idt, is_hamilton_connected)
from .hypergraph import krausz_cover
from .linegraph import line_graph, line_graph_h3, preimage
from .multigraph import MultiGraph, attach_pendant, subdivide_edge
from .pipeline import verify_dct_instance, verify_idt_instance, verify_quasitrail_instance
from .reduction import core
from .structure import is_claw_free, is_essentially_k_edge_connected, is_k_edge_connected, vertex_connectivity_at_least
from .walks import dominated_by_vertices


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    indeterminate: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.indeterminate

    def to_json(self) -> dict:
        return {"suite": self.name, "checked": self.checked, "ok": self.ok,
                "violations": self.violations, "indeterminate": self.indeterminate,
                "notes": self.notes}


def _sharded(iterable, shard):
    i, k = shard
    for idx, item in enumerate(iterable):
        if idx % k == i:
            yield item


def _collect_multigraphs(n, max_multiplicity, max_edges, filters=("connected",)):
    out = []
    enumerate_multigraphs(EnumSpec(n, max_multiplicity=max_multiplicity,
                                   max_edges=max_edges, filters=filters), out.append)
    return out


def _collect_graphs(n, filters):
    out = []
    enumerate_graphs(EnumSpec(n, filters=filters), out.append)
    return out


def _ident(g: MultiGraph) -> str:
    return canonical_form(g).decode()


# -- suite: line-graph Hamiltonicity <=> dominating closed trail ---------------

def suite_dct(n_max=6, edges_max=7, shard=(0, 1)) -> SuiteResult:
    res = SuiteResult("dct")
    population = []
    for n in range(2, n_max + 1):
        population.extend(h for h in _collect_multigraphs(n, 2, edges_max) if h.m >= 3)
    for h in _sharded(population, shard):
        res.checked += 1
        try:
            lg, _ = line_graph(h)
            ham = hamilton_cycle(lg) is not None
            dct = dominating_closed_trail(h) is not None
            if ham != dct:
                res.violations.append(f"{_ident(h)}: hamilton={ham} dct={dct}")
        except Indeterminate as exc:
            res.indeterminate.append(f"{_ident(h)}: {exc}")
    return res


# -- suite: line-graph Hamilton path <=> terminal-edge trail -------------------

def suite_idt(n_max=6, edges_max=7, shard=(0, 1)) -> SuiteResult:
    res = SuiteResult("idt")
    population = []
    for n in range(2, n_max + 1):
        population.extend(h for h in _collect_multigraphs(n, 2, edges_max) if h.m >= 3)
    for h in _sharded(population, shard):
        lg, _ = line_graph(h)
        eids = h.edge_ids()
        for i, e1 in enumerate(eids):
            for e2 in eids[i + 1:]:
                res.checked += 1
                try:
                    path = hamilton_path(lg, e1, e2) is not None
                    trail = idt(h, e1, e2) is not None
                    if path != trail:
                        res.violations.append(
                            f"{_ident(h)} ({e1},{e2}): path={path} trail={trail}")
                except Indeterminate as exc:
                    res.indeterminate.append(f"{_ident(h)}: {exc}")
    return res


# -- suites: low domination number forces Hamiltonicity ------------------------

def suite_dom2_hamilton(n_max=8, shard=(0, 1)) -> SuiteResult:
    """2-connected claw-free, domination number <= 2 => Hamiltonian."""
    res = SuiteResult("dom2-hamilton")
    population = []
    for n in range(3, n_max + 1):
        population.extend(_collect_graphs(n, ("claw-free", "2-connected")))
    for g in _sharded(population, shard):
        if domination_number(g)[0] > 2:
            continue
        res.checked += 1
        try:
            if hamilton_cycle(g) is None:
                res.violations.append(f"{_ident(g)}: gamma<=2 but not Hamiltonian")
        except Indeterminate as exc:
            res.indeterminate.append(f"{_ident(g)}: {exc}")
    return res


def suite_dom3_hamilton(n_max=9, shard=(0, 1)) -> SuiteResult:
    """3-connected claw-free, domination number <= 3 => Hamiltonian."""
    res = SuiteResult("dom3-hamilton")
    population = []
    for n in range(4, n_max + 1):
        population.extend(_collect_graphs(n, ("claw-free", "3-connected")))
    for g in _sharded(population, shard):
        if domination_number(g)[0] > 3:
            continue
        res.checked += 1
        try:
            if hamilton_cycle(g) is None:
                res.violations.append(f"{_ident(g)}: gamma<=3 but not Hamiltonian")
        except Indeterminate as exc:
            res.indeterminate.append(f"{_ident(g)}: {exc}")
    return res


def suite_dom3_hamilton_connected(n_max=8, shard=(0, 1)) -> SuiteResult:
    """3-connected claw-free, domination number <= 3 => Hamilton-connected."""
    res = SuiteResult("dom3-hamilton-connected")
    population = []
    for n in range(4, n_max + 1):
        population.extend(_collect_graphs(n, ("claw-free", "3-connected")))
    for g in _sharded(population, shard):
        if domination_number(g)[0] > 3:
            continue
        res.checked += 1
        try:
            ok, pair = is_hamilton_connected(g)
            if not ok:
                res.violations.append(f"{_ident(g)}: no Hamilton path between {pair}")
        except Indeterminate as exc:
            res.indeterminate.append(f"{_ident(g)}: {exc}")
    return res


# -- suite: the decorated-Petersen sharpness witness ---------------------------

def petersen_with_pendants() -> MultiGraph:
    g = petersen()
    for v in range(10):
        g, _ = attach_pendant(g, v)
    return g


def suite_petersen_sharp() -> SuiteResult:
    res = SuiteResult("petersen-sharp")
    hp = petersen_with_pendants()
    res.checked = 1
    member, reason = is_in_P_prime(hp)
    if not member:
        res.violations.append(f"family membership failed: {reason}")
    gamma, _w = edge_domination_number(hp)
    if gamma != 5:
        res.violations.append(f"edge domination number {gamma} != 5")
    lg, _ = line_graph(hp)
    if domination_number(lg)[0] != 5:
        res.violations.append("line graph domination number != 5")
    if not vertex_connectivity_at_least(lg, 3)[0]:
        res.violations.append("line graph is not 3-connected")
    if not is_claw_free(lg):
        res.violations.append("line graph is not claw-free")
    if dominating_closed_trail(hp) is not None:
        res.violations.append("unexpected dominating closed trail")
    if hamilton_cycle(lg) is not None:
        res.violations.append("line graph unexpectedly Hamiltonian")
    return res


# -- suites: pipeline soundness ------------------------------------------------

def _decorated_instances(n_values=(2, 3, 4, 5), edges_max=10, max_decorations=2):
    """Essentially 3-edge-connected multigraphs plus up to `max_decorations`
    pendants/subdivisions; yields (base, decorated) with deterministic order."""
    for n in n_values:
        mult = 3 if n <= 4 else 2
        for h in _collect_multigraphs(n, mult, edges_max):
            if h.m < 4 or not is_essentially_k_edge_connected(h, 3)[0]:
                continue
            ops = [("pendant", v) for v in sorted(h.vertices)]
            ops += [("subdivide", e) for e in h.edge_ids() if not h.is_loop(e)]
            for count in range(0, max_decorations + 1):
                for combo in combinations_with_replacement(range(len(ops)), count):
                    g = h
                    renamed = {e: e for e in h.edge_ids()}
                    ok = True
                    for oi in combo:
                        kind, x = ops[oi]
                        if kind == "pendant":
                            g, _ = attach_pendant(g, x)
                        else:
                            cur = renamed[x]
                            if not g.has_edge_id(cur):
                                ok = False
                                break
                            g, s = subdivide_edge(g, cur)
                            # the old id is gone; remember one half for repeats
                            renamed[x] = min(g.incident(s))
                    if ok:
                        yield h, g


def suite_pipeline_multigraph(n_values=(2, 3, 4, 5), edges_max=10,
                              max_decorations=2, shard=(0, 1),
                              idt_pairs_per_instance=3) -> SuiteResult:
    res = SuiteResult("pipeline-multigraph")
    for _base, h in _sharded(_decorated_instances(n_values, edges_max, max_decorations), shard):
        if not is_essentially_k_edge_connected(h, 3)[0]:
            continue
        gamma, witness = edge_domination_number(h)
        if gamma > 5:
            continue
        res.checked += 1
        try:
            report = verify_dct_instance(h, witness.members, instance=_ident(h))
            if report.branch == "violation":
                res.violations.append(f"dct {report.instance}: {report.diagnostic}")
            elif report.branch == "certificate":
                w = report.payload
                if not (w.validate(h) and dominated_by_vertices(h, w.visited())):
                    res.violations.append(f"dct {report.instance}: certificate invalid")
            if gamma <= 4:
                eids = h.edge_ids()
                pairs = list(combinations_with_replacement(eids, 2))
                pairs = [p for p in pairs if p[0] != p[1]][:idt_pairs_per_instance]
                for e1, e2 in pairs:
                    rep = verify_idt_instance(h, e1, e2, witness.members, instance=_ident(h))
                    if rep.branch == "violation":
                        res.violations.append(f"idt {rep.instance} ({e1},{e2}): {rep.diagnostic}")
                    elif rep.branch == "certificate" and not rep.payload.validate(h):
                        res.violations.append(f"idt {rep.instance}: certificate invalid")
        except Indeterminate as exc:
            res.indeterminate.append(f"{_ident(h)}: {exc}")
        except ValueError:
            continue  # instance fails a pipeline precondition; not in population
    return res


def suite_pipeline_quasitrail(n_values=(3, 4, 5), max_hyperedges=5, shard=(0, 1)) -> SuiteResult:
    res = SuiteResult("pipeline-quasitrail")
    population = []
    for n in n_values:
        enumerate_3hypergraphs(n, max_hyperedges, population.append, min_hyperedges=4)
    for hg in _sharded(population, shard):
        covered = set().union(*hg.hyperedges) if hg.hyperedges else set()
        if covered != set(hg.vertices):
            continue  # redundant representative with vertices in no hyperedge
        lg, _ = line_graph_h3(hg)
        if lg.n < 4 or not vertex_connectivity_at_least(lg, 3)[0]:
            continue
        gamma, witness = domination_number(lg)
        if gamma > 4:
            continue
        res.checked += 1
        try:
            report = verify_quasitrail_instance(hg, witness.members)
            if report.branch == "violation":
                res.violations.append(f"{hg!r}: {report.diagnostic}")
            elif report.branch == "certificate":
                if hamilton_cycle(lg) is None and lg.n >= 3:
                    res.violations.append(f"{hg!r}: certificate but line graph not Hamiltonian")
        except Indeterminate as exc:
            res.indeterminate.append(f"{hg!r}: {exc}")
        except HamlabError as exc:
            res.violations.append(f"{hg!r}: pipeline error {exc}")
    return res


# -- suite: core uniqueness and 3-edge-connectivity ----------------------------

def suite_core_unique(n_values=(2, 3, 4, 5), edges_max=9, orders=10, seed=7,
                      shard=(0, 1)) -> SuiteResult:
    res = SuiteResult("core-unique")
    rng = random.Random(seed)
    for _base, h in _sharded(_decorated_instances(n_values, edges_max, 2), shard):
        res.checked += 1

        def outcome(order_rng=None):
            try:
                c, _t = core(h, rng=order_rng)
            except DegenerateCore:
                return b"degenerate"
            return canonical_form(c)

        forms = {outcome()}
        for _ in range(orders):
            forms.add(outcome(rng))
        if len(forms) != 1:
            res.violations.append(f"{_ident(h)}: cores differ across orders")
            continue
        form = next(iter(forms))
        if form != b"degenerate" and is_essentially_k_edge_connected(h, 3)[0]:
            c0, _ = core(h)
            if c0.n > 1 and not is_k_edge_connected(c0, 3)[0]:
                res.violations.append(f"{_ident(h)}: core not 3-edge-connected")
    return res


# -- suite: trail-or-contraction dichotomies -----------------------------------

def suite_dichotomy(n_max=6, edges_max=12, samples=20, seed=11, shard=(0, 1)) -> SuiteResult:
    res = SuiteResult("dichotomy")
    rng = random.Random(seed)
    population = []
    for n in range(2, n_max + 1):
        for h in _collect_multigraphs(n, 2, edges_max):
            if h.m >= 3 and is_k_edge_connected(h, 3)[0]:
                population.append(h)
    for h in _sharded(population, shard):
        verts = sorted(h.vertices)
        for _ in range(samples):
            size = rng.randint(1, min(12, len(verts)))
            marks = set(rng.sample(verts, size))
            res.checked += 1
            try:
                trail = closed_trail_through(h, marks)
                if trail is not None:
                    continue
                if h.n >= 10 and find_contraction(h, petersen(), marks) is not None:
                    continue
                res.violations.append(f"{_ident(h)} A={sorted(marks)}: neither branch")
            except Indeterminate as exc:
                res.indeterminate.append(f"{_ident(h)}: {exc}")

    # the Petersen graph itself: contraction branch exactly, both variants
    p = petersen()
    res.checked += 1
    if closed_trail_through(p, set(p.vertices)) is not None:
        res.violations.append("petersen: unexpected spanning closed trail")
    if find_contraction(p, petersen(), set(p.vertices)) is None:
        res.violations.append("petersen: identity contraction not found")
    for e in p.edge_ids():
        res.checked += 1
        a, b = p.endpoints(e)
        marks = set(p.vertices) - {a, b}
        if closed_trail_through(p, marks, required=e) is not None:
            res.violations.append(f"petersen edge {e}: unexpected constrained trail")
        cert = find_contraction(p, petersen(), marks, edge_constraint=e)
        if cert is None or not cert.validate(p):
            res.violations.append(f"petersen edge {e}: constrained contraction missing")
    return res


# -- suite: closure properties -------------------------------------------------

def suite_closure(n_max=8, shard=(0, 1)) -> SuiteResult:
    res = SuiteResult("closure")
    population = []
    for n in range(1, n_max + 1):
        population.extend(_collect_graphs(n, ("claw-free", "connected")))
    for g in _sharded(population, shard):
        res.checked += 1
        cl, _tr = ryjacek_closure(g)
        cl2, tr2 = ryjacek_closure(cl)
        if tr2.steps or cl2 != cl:
            res.violations.append(f"{_ident(g)}: closure not idempotent")
        clr, _ = ryjacek_closure(g, reverse=True)
        if _edge_pairs(cl) != _edge_pairs(clr):
            res.violations.append(f"{_ident(g)}: closure depends on completion order")
        if g.n >= 3:
            try:
                before = hamilton_cycle(g) is not None
                after = hamilton_cycle(cl) is not None
                if before != after:
                    res.violations.append(f"{_ident(g)}: closure changed Hamiltonicity")
            except Indeterminate as exc:
                res.indeterminate.append(f"{_ident(g)}: {exc}")
        if cl.m >= 2:
            try:
                h = preimage(cl)
                if not _triangle_free(h):
                    res.violations.append(f"{_ident(g)}: closure preimage has a triangle")
            except NotLineGraph:
                res.violations.append(f"{_ident(g)}: closure is not a line graph")
    return res


def _edge_pairs(g: MultiGraph):
    return sorted(tuple(sorted(g.endpoints(e), key=repr)) for e in g.edge_ids())


# -- suite: tripartite witnesses and blow-ups ----------------------------------

def suite_witnesses() -> SuiteResult:
    from .families import blowup, k113, k123

    res = SuiteResult("witnesses")

    for k in (1, 2, 3):
        g = blowup("k123", k)
        res.checked += 1
        if not vertex_connectivity_at_least(g, 3)[0]:
            res.violations.append(f"k123 blowup {k}: not 3-connected")
        if domination_number(g)[0] != 1:
            res.violations.append(f"k123 blowup {k}: domination number != 1")
        if krausz_cover(g, 3) is None:
            res.violations.append(f"k123 blowup {k}: no 3-clique cover")
        ok, _pair = is_hamilton_connected(g)
        if ok:
            res.violations.append(f"k123 blowup {k}: unexpectedly Hamilton-connected")

    for k in (1, 2, 3):
        g = blowup("k113", k)
        res.checked += 1
        if not vertex_connectivity_at_least(g, 2)[0]:
            res.violations.append(f"k113 blowup {k}: not 2-connected")
        if domination_number(g)[0] != 1:
            res.violations.append(f"k113 blowup {k}: domination number != 1")
        if hamilton_cycle(g) is not None:
            res.violations.append(f"k113 blowup {k}: unexpectedly Hamiltonian")

    cover = krausz_cover(k123(), 3)
    res.checked += 1
    if cover is None:
        res.violations.append("k123: no 3-clique cover")
    else:
        _cliques, hg = cover
        lg, _ = line_graph_h3(hg)
        if not is_isomorphic(lg, k123()):
            res.violations.append("k123: reconstructed hypergraph line graph mismatch")
    return res


SUITES = {
    "dct": suite_dct,
    "idt": suite_idt,
    "dom2-hamilton": suite_dom2_hamilton,
    "dom3-hamilton": suite_dom3_hamilton,
    "dom3-hamilton-connected": suite_dom3_hamilton_connected,
    "petersen-sharp": suite_petersen_sharp,
    "pipeline-multigraph": suite_pipeline_multigraph,
    "pipeline-quasitrail": suite_pipeline_quasitrail,
    "core-unique": suite_core_unique,
    "dichotomy": suite_dichotomy,
    "closure": suite_closure,
    "witnesses": suite_witnesses,
}
