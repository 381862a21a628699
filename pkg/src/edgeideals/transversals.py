"""Minimal hitting sets by sequential Berge expansion."""

from __future__ import annotations

from typing import Iterable

from .bits import members, minimal_sets


def berge_transversals(family: Iterable[int]) -> list[int]:
    """Minimal transversals of a family of vertex sets (bitmasks).

    Edges are absorbed one at a time: every current transversal that already
    meets the new edge survives unchanged, every other one is extended by each
    vertex of the edge, and the result is cut back to its inclusion-minimal
    members. An empty family yields ``[0]`` (the empty set hits nothing and
    needs to hit nothing). A family containing the empty set yields ``[]``.
    """
    current = [0]
    for edge in minimal_sets(family):
        if edge == 0:
            return []
        grown = []
        for tr in current:
            if tr & edge:
                grown.append(tr)
            else:
                grown.extend(tr | (1 << v) for v in members(edge))
        current = minimal_sets(grown)
    return current
