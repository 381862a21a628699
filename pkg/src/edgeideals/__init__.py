"""Edge ideals and independence complexes of hypergraphs, with exact property checks."""

from .complex import SimplicialComplex, from_facets
from .homology import GF2, Q, Field, reduced_homology
from .hypergraph import (
    Hypergraph,
    PartiteSpec,
    complete_multipartite,
    hypergraph,
    independence_complex,
)
from .ideals import MonomialIdeal, edge_ideal, stanley_reisner

__all__ = [
    "Field",
    "GF2",
    "Hypergraph",
    "MonomialIdeal",
    "PartiteSpec",
    "Q",
    "SimplicialComplex",
    "complete_multipartite",
    "edge_ideal",
    "from_facets",
    "hypergraph",
    "independence_complex",
    "reduced_homology",
    "stanley_reisner",
]
