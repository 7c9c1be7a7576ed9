"""Command-line interface.

Exit codes: 0 success / property holds; 2 a checked property fails or a suite
reports violations; 3 a search exhausted its budget; 4 malformed input.
"""

from __future__ import annotations

import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import click

from .closure import ryjacek_closure
from .contraction import find_contraction, petersen, wagner
from .domination import domination_number, edge_domination_number
from .errors import HamlabError, Indeterminate, NotLineGraph
from .families import is_in_P_prime, is_in_W_prime
from .hamilton import (closed_trail_through, dominating_closed_trail,
                       dominating_quasitrail, hamilton_cycle, hamilton_path,
                       idt, is_hamilton_connected)
from .hypergraph import incidence_graph, krausz_cover, parse_hypergraph
from .linegraph import line_graph, line_graph_h3, preimage
from .multigraph import parse_edgelist, to_edgelist
from .pipeline import (verify_dct_instance, verify_idt_instance,
                       verify_quasitrail_instance)
from .reduction import core
from .structure import (is_claw_free, is_essentially_k_edge_connected,
                        vertex_connectivity_at_least)
from .suites import SUITES, SuiteResult

EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_INDETERMINATE = 3
EXIT_INPUT = 4


def _load_graph(path):
    try:
        with open(path) as fh:
            return parse_edgelist(fh.read())
    except (OSError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)


def _load_hypergraph(path):
    try:
        with open(path) as fh:
            return parse_hypergraph(fh.read())
    except (OSError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)


def _run(fn):
    try:
        return fn()
    except Indeterminate as exc:
        click.echo(f"indeterminate: {exc}", err=True)
        sys.exit(EXIT_INDETERMINATE)
    except HamlabError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)


@click.group()
def main():
    """Graph-structure toolbox: line graphs, closures, trails, contractions,
    and exhaustive verification suites over small graph populations."""


@main.command()
@click.argument("path", type=click.Path(exists=True))
def analyze(path):
    """Print structural statistics of a multigraph."""
    g = _load_graph(path)
    info = {
        "vertices": g.n,
        "edges": g.m,
        "simple": g.is_simple(),
        "connected": g.is_connected(),
        "claw_free": is_claw_free(g),
        "three_connected": vertex_connectivity_at_least(g, 3)[0],
    }
    if g.m >= 4:
        info["essentially_3_edge_connected"] = is_essentially_k_edge_connected(g, 3)[0]
    info["domination_number"] = domination_number(g)[0]
    info["edge_domination_number"] = edge_domination_number(g)[0]
    click.echo(json.dumps(info, indent=2))


@main.command()
@click.argument("path", type=click.Path(exists=True))
def linegraph(path):
    """Write the line graph of a multigraph as an edge list."""
    g = _load_graph(path)
    lg, _ = _run(lambda: line_graph(g))
    click.echo(to_edgelist(lg), nl=False)


@main.command("preimage")
@click.argument("path", type=click.Path(exists=True))
def preimage_cmd(path):
    """Write a multigraph whose line graph is the input, or fail with the obstruction."""
    g = _load_graph(path)
    try:
        h = preimage(g)
    except NotLineGraph as exc:
        click.echo(f"not a line graph: {exc.obstruction}", err=True)
        sys.exit(EXIT_VIOLATION)
    click.echo(to_edgelist(h), nl=False)


@main.command()
@click.argument("path", type=click.Path(exists=True))
def closure(path):
    """Write the local-completion closure of a claw-free graph."""
    g = _load_graph(path)
    cl, trace = _run(lambda: ryjacek_closure(g))
    click.echo(to_edgelist(cl), nl=False)
    click.echo(f"# completions: {len(trace.steps)}", err=True)


@main.command("core")
@click.argument("path", type=click.Path(exists=True))
def core_cmd(path):
    """Write the pendant-and-subdivision-free core of a multigraph."""
    g = _load_graph(path)
    c, trace = _run(lambda: core(g))
    click.echo(to_edgelist(c), nl=False)
    click.echo(f"# reduction steps: {len(trace.ops)}", err=True)


@main.command()
@click.argument("path", type=click.Path(exists=True))
@click.option("--a", default=None, help="Hamilton path endpoint")
@click.option("--b", default=None, help="Hamilton path endpoint")
@click.option("--connected", is_flag=True, help="test Hamilton-connectedness")
def ham(path, a, b, connected):
    """Search for a Hamilton cycle (default), a Hamilton a-b path, or test
    Hamilton-connectedness."""
    g = _load_graph(path)
    if connected:
        ok, pair = _run(lambda: is_hamilton_connected(g))
        if ok:
            click.echo("hamilton-connected")
            return
        click.echo(f"no hamilton path between {pair}")
        sys.exit(EXIT_VIOLATION)
    if (a is None) != (b is None):
        click.echo("error: --a and --b must be given together", err=True)
        sys.exit(EXIT_INPUT)
    if a is not None:
        va, vb = int(a), int(b)
        cert = _run(lambda: hamilton_path(g, va, vb))
    else:
        cert = _run(lambda: hamilton_cycle(g))
    if cert is None:
        click.echo("none")
        sys.exit(EXIT_VIOLATION)
    click.echo(json.dumps(cert.to_json()))


@main.command()
@click.argument("path", type=click.Path(exists=True))
@click.option("--marks", default="", help="comma-separated vertices the trail must visit")
@click.option("--required", default=None, type=int, help="edge id the trail must use")
def trail(path, marks, required):
    """Search for a closed trail through the marked vertices."""
    g = _load_graph(path)
    mk = {int(x) for x in marks.split(",") if x.strip()}
    cert = _run(lambda: closed_trail_through(g, mk, required=required))
    if cert is None:
        click.echo("none")
        sys.exit(EXIT_VIOLATION)
    click.echo(json.dumps(cert.to_json()))


@main.command()
@click.argument("path", type=click.Path(exists=True))
def dct(path):
    """Search for a dominating closed trail."""
    g = _load_graph(path)
    cert = _run(lambda: dominating_closed_trail(g))
    if cert is None:
        click.echo("none")
        sys.exit(EXIT_VIOLATION)
    click.echo(json.dumps(cert.to_json()))


@main.command("idt")
@click.argument("path", type=click.Path(exists=True))
@click.argument("e1", type=int)
@click.argument("e2", type=int)
def idt_cmd(path, e1, e2):
    """Search for an internally dominating trail between two edges."""
    g = _load_graph(path)
    cert = _run(lambda: idt(g, e1, e2))
    if cert is None:
        click.echo("none")
        sys.exit(EXIT_VIOLATION)
    click.echo(json.dumps(cert.to_json()))


@main.command()
@click.argument("path", type=click.Path(exists=True))
def quasitrail(path):
    """Search a rank-3 hypergraph's incidence graph for a dominating quasitrail."""
    hg = _load_hypergraph(path)
    ig = incidence_graph(hg)
    cert = _run(lambda: dominating_quasitrail(ig.graph, ig.whites))
    if cert is None:
        click.echo("none")
        sys.exit(EXIT_VIOLATION)
    click.echo(json.dumps(cert.to_json()))


@main.command()
@click.argument("path", type=click.Path(exists=True))
@click.option("--target", type=click.Choice(["petersen", "wagner"]), required=True)
@click.option("--marks", default="", help="comma-separated marked vertices")
@click.option("--edge", default=None, type=int, help="require this edge between two contracted parts")
def contract(path, target, marks, edge):
    """Search for a marked contraction onto the Petersen or Wagner graph."""
    g = _load_graph(path)
    tgt = petersen() if target == "petersen" else wagner()
    mk = {int(x) for x in marks.split(",") if x.strip()}
    cert = _run(lambda: find_contraction(g, tgt, mk, edge_constraint=edge))
    if cert is None:
        click.echo("none")
        sys.exit(EXIT_VIOLATION)
    click.echo(json.dumps({"partition": {str(v): p for v, p in sorted(cert.partition.items())},
                           "marks": sorted(cert.marks)}))


@main.command()
@click.argument("path", type=click.Path(exists=True))
@click.option("--family", type=click.Choice(["petersen", "wagner"]), required=True)
def family(path, family):
    """Test membership in one of the two exceptional decoration families."""
    g = _load_graph(path)
    checker = is_in_P_prime if family == "petersen" else is_in_W_prime
    member, reason = _run(lambda: checker(g))
    if member:
        click.echo("member")
        return
    click.echo(f"not a member: {reason}")
    sys.exit(EXIT_VIOLATION)


@main.command()
@click.argument("path", type=click.Path(exists=True))
@click.option("--cliques", "max_cliques", default=3, type=int,
              help="per-vertex clique membership bound")
def krausz(path, max_cliques):
    """Search for a clique edge cover realizing the graph as a hypergraph line graph."""
    g = _load_graph(path)
    found = _run(lambda: krausz_cover(g, max_cliques))
    if found is None:
        click.echo("none")
        sys.exit(EXIT_VIOLATION)
    cliques, hg = found
    out = {"cliques": [sorted(c) for c in cliques]}
    if hg is not None:
        out["hyperedges"] = [sorted(e) for e in hg.hyperedges]
    click.echo(json.dumps(out))


@main.command("verify")
@click.argument("pipeline", type=click.Choice(["dct", "idt", "quasitrail"]))
@click.argument("path", type=click.Path(exists=True))
@click.option("--dominators", required=True,
              help="comma-separated dominating edge ids (dct/idt) or hyperedge indices (quasitrail)")
@click.option("--pair", default=None, help="e1,e2 terminal edges (idt only)")
def verify_cmd(pipeline, path, dominators, pair):
    """Run one structural pipeline on a single instance and print the verdict."""
    dom = [int(x) for x in dominators.split(",") if x.strip()]
    if pipeline == "quasitrail":
        hg = _load_hypergraph(path)
        report = _run(lambda: verify_quasitrail_instance(hg, dom, instance=path))
    else:
        g = _load_graph(path)
        if pipeline == "idt":
            if pair is None:
                click.echo("error: --pair is required for idt", err=True)
                sys.exit(EXIT_INPUT)
            e1, e2 = (int(x) for x in pair.split(","))
            report = _run(lambda: verify_idt_instance(g, e1, e2, dom, instance=path))
        else:
            report = _run(lambda: verify_dct_instance(g, dom, instance=path))
    click.echo(json.dumps(report.to_json()))
    if report.branch == "violation":
        sys.exit(EXIT_VIOLATION)


def _merge(results) -> SuiteResult:
    merged = SuiteResult(results[0].name)
    for r in results:
        merged.checked += r.checked
        merged.violations.extend(r.violations)
        merged.indeterminate.extend(r.indeterminate)
        merged.notes.update(r.notes)
    return merged


@main.command()
@click.argument("name", type=click.Choice(sorted(SUITES)))
@click.option("--shard", default="0/1", help="i/k: run the i-th of k interleaved shards")
@click.option("--emit-certificates", default=None, type=click.Path(),
              help="write the suite report as JSON to this path")
def suite(name, shard, emit_certificates):
    """Run a verification suite over its enumerated population.

    HAMLAB_THREADS splits the (possibly already sharded) work across threads."""
    try:
        i, k = (int(x) for x in shard.split("/"))
        if not 0 <= i < k:
            raise ValueError
    except ValueError:
        click.echo("error: --shard must be i/k with 0 <= i < k", err=True)
        sys.exit(EXIT_INPUT)
    fn = SUITES[name]
    threads = max(1, int(os.environ.get("HAMLAB_THREADS", "1")))
    accepts_shard = "shard" in fn.__code__.co_varnames
    if not accepts_shard:
        result = fn()
    elif threads == 1:
        result = fn(shard=(i, k))
    else:
        subshards = [(i + j * k, k * threads) for j in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda s: fn(shard=s), subshards))
        result = _merge(parts)
    report = result.to_json()
    click.echo(json.dumps(report, indent=2))
    if emit_certificates:
        with open(emit_certificates, "w") as fh:
            json.dump(report, fh, indent=2)
    if result.violations:
        sys.exit(EXIT_VIOLATION)
    if result.indeterminate:
        sys.exit(EXIT_INDETERMINATE)


if __name__ == "__main__":
    main()
