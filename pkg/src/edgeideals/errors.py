from __future__ import annotations


class ValidationError(ValueError):
    """Malformed input: bad spec, vertex out of range, non-antichain edges."""


class EdgelessError(ValueError):
    """Transversal quantities requested for a hypergraph with no edges."""


class IsolatedEdgeContraction(ValueError):
    """Contracting v where {v} is itself an edge would produce the unit ideal."""


class CapExceeded(RuntimeError):
    """A desk-scale resource cap (vertex count, facet count) was exceeded."""
