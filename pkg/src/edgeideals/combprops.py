"""Shellability and vertex decomposability, with re-checkable certificates."""

from __future__ import annotations

import logging
from typing import Sequence

from .bits import is_subset, maximal_sets, members, size, sort_key
from .complex import SimplicialComplex
from .errors import CapExceeded, ValidationError

log = logging.getLogger(__name__)

SHELLING_FACET_CAP = 24
VD_CACHE_LIMIT = 500_000


# ---------------------------------------------------------------- shellability


def _attaches(new: int, placed: Sequence[int]) -> bool:
    """Nonpure shelling step: every earlier facet meets ``new`` only inside
    the union of codimension-one faces ``new`` shares with earlier facets."""
    if not placed:
        return True
    codim_one = 0
    for g in placed:
        d = new & ~g
        if d and d & (d - 1) == 0:
            codim_one |= d
    return all((new & ~g) & codim_one for g in placed)


def shelling_order(c: SimplicialComplex, cap: int = SHELLING_FACET_CAP) -> list[int] | None:
    """A shelling order of the facets (as bitmasks), or None if not shellable.

    Whether a facet may come next depends only on the set already placed, so
    the backtracking search remembers dead sets. Candidates are tried largest
    first, then lexicographically.
    """
    if len(c.facets) > cap:
        raise CapExceeded(f"{len(c.facets)} facets exceeds the shelling cap {cap}")
    fs = sorted(c.facets, key=lambda f: (-size(f), sort_key(f)))
    m = len(fs)
    order: list[int] = []
    dead: set[int] = set()

    def extend(used: int) -> bool:
        if len(order) == m:
            return True
        if used in dead:
            return False
        placed = [fs[k] for k in order]
        for a in range(m):
            if used >> a & 1:
                continue
            if _attaches(fs[a], placed):
                order.append(a)
                if extend(used | (1 << a)):
                    return True
                order.pop()
        dead.add(used)
        return False

    if not extend(0):
        return None
    return [fs[k] for k in order]


def verify_shelling(c: SimplicialComplex, order: Sequence[int]) -> bool:
    """Raw definition: for all i and j < i there are v in F_i \\ F_j and k < i
    with F_i \\ F_k = {v}."""
    if sorted(order) != sorted(c.facets):
        return False
    for i, fi in enumerate(order):
        for j in range(i):
            ok = any(
                fi & ~order[k] == (1 << v)
                for v in members(fi & ~order[j])
                for k in range(i)
            )
            if not ok:
                return False
    return True


def is_shellable(c: SimplicialComplex, cap: int = SHELLING_FACET_CAP) -> tuple[bool, list[list[int]] | None]:
    order = shelling_order(c, cap)
    if order is None:
        return False, None
    return True, [members(f) for f in order]


# ---------------------------------------------------------------- vertex decomposability
#
# The recursion keeps original vertex ids (no re-indexing) so certificates name
# vertices of the input complex. A complex is a sorted tuple of facet masks.


def _deletion(facets: tuple[int, ...], v: int) -> tuple[int, ...]:
    bit = 1 << v
    return tuple(maximal_sets(f & ~bit for f in facets))


def _link(facets: tuple[int, ...], v: int) -> tuple[int, ...]:
    bit = 1 << v
    return tuple(maximal_sets(f & ~bit for f in facets if f & bit))


def _is_shedding(facets: tuple[int, ...], v: int) -> bool:
    # no facet G of the deletion lies in the link, i.e. G + v is never a face
    bit = 1 << v
    for g in _deletion(facets, v):
        if any(is_subset(g | bit, f) for f in facets):
            return False
    return True


def shedding_vertices(c: SimplicialComplex) -> list[int]:
    return [v for v in members(c.vertex_mask) if _is_shedding(c.facets, v)]


class _VDSearch:
    def __init__(self):
        self.memo: dict[tuple[int, ...], dict | None] = {}

    def run(self, facets: tuple[int, ...]) -> dict | None:
        if len(facets) <= 1:
            return {"simplex": [members(f) for f in facets]}
        if facets in self.memo:
            return self.memo[facets]
        result = None
        verts = 0
        for f in facets:
            verts |= f
        for v in members(verts):
            if not _is_shedding(facets, v):
                continue
            dele = self.run(_deletion(facets, v))
            if dele is None:
                continue
            lk = self.run(_link(facets, v))
            if lk is None:
                continue
            result = {"vertex": v, "deletion": dele, "link": lk}
            break
        if len(self.memo) < VD_CACHE_LIMIT:
            self.memo[facets] = result
        elif len(self.memo) == VD_CACHE_LIMIT:
            log.warning("vertex-decomposability memo full at %d entries", VD_CACHE_LIMIT)
        return result


def is_vertex_decomposable(c: SimplicialComplex) -> tuple[bool, dict | None]:
    """Decide vertex decomposability; on success also return a shedding tree.

    Tree nodes are ``{"simplex": facets}`` leaves (VOID, IRRELEVANT and any
    simplex) or ``{"vertex": v, "deletion": node, "link": node}``.
    """
    tree = _VDSearch().run(tuple(c.facets))
    return tree is not None, tree


def verify_shedding_tree(c: SimplicialComplex, tree: dict) -> bool:
    return _verify_tree(tuple(c.facets), tree)


def _verify_tree(facets: tuple[int, ...], node: dict) -> bool:
    if "simplex" in node:
        return len(facets) <= 1 and sorted(members(f) for f in facets) == sorted(node["simplex"])
    v = node["vertex"]
    if not any(f >> v & 1 for f in facets):
        return False
    if not _is_shedding(facets, v):
        return False
    return _verify_tree(_deletion(facets, v), node["deletion"]) and _verify_tree(
        _link(facets, v), node["link"]
    )


def certificate(c: SimplicialComplex, what: str) -> dict:
    if what == "shellable":
        ok, order = is_shellable(c)
        return {"property": "shellable", "value": ok, "certificate": order}
    if what == "vd":
        ok, tree = is_vertex_decomposable(c)
        return {"property": "vertex_decomposable", "value": ok, "certificate": tree}
    raise ValidationError(f"unknown certificate kind {what!r}")
