"""Exception types shared across the package."""


class HamlabError(Exception):
    """Base class for all package-specific errors."""


class UnknownVertex(HamlabError, KeyError):
    pass


class UnknownEdge(HamlabError, KeyError):
    pass


class NotSimple(HamlabError, ValueError):
    """A simple-graph operation was handed parallel edges or loops."""


class TooFewEdges(HamlabError, ValueError):
    """Essential edge-connectivity queried on a graph with < k+1 edges."""


class SizeBoundExceeded(HamlabError, ValueError):
    """Input is larger than the configured desk-scale bound."""


class NotLineGraph(HamlabError, ValueError):
    """No multigraph preimage exists; carries an obstruction when cheap."""

    def __init__(self, message, obstruction=None):
        super().__init__(message)
        self.obstruction = obstruction


class DegenerateCore(HamlabError, ValueError):
    """Core reduction collapsed the graph entirely (e.g. a bare cycle)."""

    def __init__(self, message, partial_trace=None):
        super().__init__(message)
        self.partial_trace = partial_trace


class StructuralViolation(HamlabError, RuntimeError):
    """A structural guarantee the input was supposed to satisfy failed.

    Carries the offending object (e.g. an edge cut) for triage.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class Indeterminate(HamlabError, RuntimeError):
    """A complete search ran out of its node budget before concluding."""
