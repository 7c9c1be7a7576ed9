"""hamlab: line graphs, closures, dominating trails, and marked contractions
for small multigraphs and rank-3 hypergraphs, with exhaustive verification
suites and machine-checkable certificates."""

from .closure import ryjacek_closure
from .contraction import ContractionCert, contract, find_contraction, petersen, wagner
from .domination import domination_number, edge_domination_number
from .errors import (DegenerateCore, HamlabError, Indeterminate, NotLineGraph,
                     NotSimple, SizeBoundExceeded, StructuralViolation,
                     TooFewEdges, UnknownEdge, UnknownVertex)
from .families import (blowup, is_in_P_prime, is_in_W_prime, k113, k123,
                       p_prime_member, w_prime_member)
from .hamilton import (closed_trail_through, dominating_closed_trail,
                       dominating_quasitrail, hamilton_cycle, hamilton_path,
                       idt, is_hamilton_connected)
from .hypergraph import (Hypergraph3, essentialize, incidence_graph,
                         krausz_cover, parse_hypergraph, reduce_incidence)
from .linegraph import line_graph, line_graph_h3, preimage
from .multigraph import MultiGraph, parse_edgelist, to_edgelist
from .pipeline import (VerdictReport, verify_dct_instance, verify_idt_instance,
                       verify_quasitrail_instance)
from .reduction import core, lift_core_trail, map_edge_to_core
from .structure import (is_claw_free, is_essentially_k_edge_connected,
                        is_k_edge_connected, vertex_connectivity_at_least)
from .walks import WalkCert

__version__ = "0.1.0"
