"""Definitional checks for algebraic properties of Stanley-Reisner rings.

Every check returns a :class:`PropertyVerdict`; a false verdict carries a
witness whenever the property fails at a specific place (a face whose link
has homology in the wrong degree, a removed vertex set, a disconnected
skeleton, ...).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .bits import members, size
from .complex import (
    SimplicialComplex,
    all_faces,
    core,
    induced_subcomplex,
    is_connected,
    link,
    pure_skeleton,
    reduced_euler,
)
from .errors import ValidationError
from .homology import Q, Field, reduced_homology
from .ideals import MonomialIdeal, ideal_height, mu

ORACLE = "oracle"
CLOSED_FORM = "closed_form"


@dataclass
class PropertyVerdict:
    name: str
    value: bool
    witness: Any = None
    method: str = ORACLE
    note: str = ""

    def __bool__(self):
        return self.value

    def to_json(self) -> dict:
        out = {"property": self.name, "value": self.value, "method": self.method}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        return out


def _faces_by_size(c: SimplicialComplex) -> list[int]:
    return sorted(all_faces(c), key=lambda f: (size(f), f))


def _link_obstruction(c, face, max_degree, field):
    """Smallest i <= max_degree with H~_i(lk face) != 0, or None."""
    prof = reduced_homology(link(c, face), field)
    for i, d in prof.dims:
        if i > max_degree:
            break
        if d:
            return i
    return None


def is_unmixed(c: SimplicialComplex) -> PropertyVerdict:
    sizes = {size(f) for f in c.facets}
    if len(sizes) <= 1:
        return PropertyVerdict("unmixed", True)
    small = min(c.facets, key=size)
    big = max(c.facets, key=size)
    return PropertyVerdict("unmixed", False, {"facets": [members(small), members(big)]})


def is_cm(c: SimplicialComplex, field: Field = Q) -> PropertyVerdict:
    """Reisner: H~_i(lk F) = 0 for every face F (empty face included), i < dim lk F."""
    return _cm_cached(c, field)


@lru_cache(maxsize=100000)
def _cm_cached(c: SimplicialComplex, field: Field) -> PropertyVerdict:
    if c.is_void:
        return PropertyVerdict("cm", True)
    for f in _faces_by_size(c):
        lk = link(c, f)
        bad = _link_obstruction(c, f, lk.dim - 1, field)
        if bad is not None:
            return PropertyVerdict("cm", False, {"face": members(f), "degree": bad})
    return PropertyVerdict("cm", True)


def satisfies_sr(c: SimplicialComplex, r: int, field: Field = Q) -> PropertyVerdict:
    """Serre's S_r: H~_i(lk F) = 0 for -1 <= i <= r-2 and all faces with |F| <= d-i-2."""
    if r < 2:
        raise ValidationError("S_r is only defined here for r >= 2")
    name = f"s{r}"
    if c.is_void:
        return PropertyVerdict(name, True)
    d = c.dim + 1
    for f in _faces_by_size(c):
        k = size(f)
        top = min(r - 2, d - k - 2)
        if top < -1:
            continue
        bad = _link_obstruction(c, f, top, field)
        if bad is not None:
            return PropertyVerdict(name, False, {"face": members(f), "degree": bad})
    return PropertyVerdict(name, True)


def is_buchsbaum(c: SimplicialComplex, field: Field = Q) -> PropertyVerdict:
    """Pure, and Reisner's vanishing for every nonempty face."""
    if c.is_void:
        return PropertyVerdict("buchsbaum", True)
    if not c.is_pure():
        return PropertyVerdict("buchsbaum", False, {"reason": "not pure"})
    for f in _faces_by_size(c):
        if f == 0:
            continue
        lk = link(c, f)
        bad = _link_obstruction(c, f, lk.dim - 1, field)
        if bad is not None:
            return PropertyVerdict("buchsbaum", False, {"face": members(f), "degree": bad})
    return PropertyVerdict("buchsbaum", True)


def _l_property(c, l, base, name, field) -> PropertyVerdict:
    if l < 1:
        raise ValidationError("l must be at least 1")
    verts = members(c.vertex_mask)
    everything = c.vertex_mask
    for k in range(0, min(l - 1, len(verts)) + 1):
        for w in itertools.combinations(verts, k):
            wmask = sum(1 << v for v in w)
            sub = induced_subcomplex(c, everything & ~wmask)
            if sub.dim != c.dim:
                return PropertyVerdict(name, False, {"removed": list(w), "reason": "dimension drops"})
            if not base(sub, field).value:
                return PropertyVerdict(name, False, {"removed": list(w), "reason": f"not {base.__name__[3:]}"})
    return PropertyVerdict(name, True)


def is_l_cm(c: SimplicialComplex, l: int, field: Field = Q) -> PropertyVerdict:
    """Every removal of fewer than ``l`` vertices stays CM without losing dimension."""
    return _l_property(c, l, is_cm, f"{l}-cm", field)


def is_l_buchsbaum(c: SimplicialComplex, l: int, field: Field = Q) -> PropertyVerdict:
    return _l_property(c, l, is_buchsbaum, f"{l}-buchsbaum", field)


def _is_cycle_graph(g: SimplicialComplex) -> bool:
    if not g.facets or any(size(f) != 2 for f in g.facets):
        return False
    verts = members(g.vertex_mask)
    if len(verts) < 3 or len(g.facets) != len(verts):
        return False
    deg = {v: 0 for v in verts}
    for f in g.facets:
        for v in members(f):
            deg[v] += 1
    return all(x == 2 for x in deg.values()) and is_connected(g)


def _is_short_path(g: SimplicialComplex) -> bool:
    """A single edge, or two edges sharing a vertex."""
    if any(size(f) != 2 for f in g.facets):
        return False
    if len(g.facets) == 1:
        return True
    return len(g.facets) == 2 and bool(g.facets[0] & g.facets[1])


def is_gorenstein(c: SimplicialComplex, field: Field = Q) -> PropertyVerdict:
    """Stanley's criterion evaluated on the core of ``c``.

    Gorenstein iff the core is {}/{empty}, one point or two points, or the core
    is CM of dimension >= 1, the link of every face of codimension two in the
    core is a cycle, an edge or a two-edge path, and its reduced Euler
    characteristic is (-1)^dim (not required in characteristic 2).
    """
    lam = core(c)
    nverts = size(lam.vertex_mask)
    if lam.is_void or lam.is_irrelevant:
        return PropertyVerdict("gorenstein", True, note="core is empty")
    if lam.dim == 0:
        if nverts <= 2:
            return PropertyVerdict("gorenstein", True, note=f"core is {nverts} point(s)")
        return PropertyVerdict("gorenstein", False, {"reason": f"core is {nverts} points"})
    cm = is_cm(lam, field)
    if not cm.value:
        return PropertyVerdict("gorenstein", False, {"reason": "core not CM", "cm_witness": cm.witness})
    codim2 = lam.dim - 1  # faces of cardinality dim(core) - 1
    for f in all_faces(lam):
        if size(f) != codim2:
            continue
        lk = link(lam, f)
        if not (_is_cycle_graph(lk) or _is_short_path(lk)):
            return PropertyVerdict(
                "gorenstein", False, {"reason": "bad codimension-two link", "face": members(f)}
            )
    if field.p != 2:
        chi = reduced_euler(lam)
        if chi != (-1) ** lam.dim:
            return PropertyVerdict("gorenstein", False, {"reason": "euler characteristic", "chi": chi})
    return PropertyVerdict("gorenstein", True)


def _pairwise_coprime(i: MonomialIdeal) -> bool:
    return all(not (a & b) for a, b in itertools.combinations(i.gens, 2))


def is_complete_intersection(i: MonomialIdeal) -> PropertyVerdict:
    """mu = ht, cross-checked against pairwise coprime generators."""
    if i.is_zero:
        raise ValidationError("zero ideal")
    m, h = mu(i), ideal_height(i)
    by_count = m == h
    by_support = _pairwise_coprime(i)
    if by_count != by_support:
        raise AssertionError(f"CI tests disagree: mu={m}, ht={h}, coprime={by_support}")
    return PropertyVerdict("ci", by_count, {"mu": m, "ht": h})


def is_almost_ci(i: MonomialIdeal) -> PropertyVerdict:
    if i.is_zero:
        raise ValidationError("zero ideal")
    m, h = mu(i), ideal_height(i)
    return PropertyVerdict("almost_ci", m == h + 1, {"mu": m, "ht": h})


def is_seq_cm(c: SimplicialComplex, field: Field = Q) -> PropertyVerdict:
    """Every pure skeleton is CM (Duval's criterion)."""
    if c.is_void or c.is_irrelevant:
        return PropertyVerdict("seq_cm", True)
    for i in range(0, c.dim + 1):
        if not is_cm(pure_skeleton(c, i), field).value:
            return PropertyVerdict("seq_cm", False, {"skeleton": i})
    return PropertyVerdict("seq_cm", True)


def is_seq_s2(c: SimplicialComplex, field: Field = Q) -> PropertyVerdict:
    """Connected pure skeletons in every dimension >= 1, recursively in vertex links.

    Field-independent; ``field`` is accepted for a uniform signature.
    """
    path = _seq_s2_failure(c)
    if path is None:
        return PropertyVerdict("seq_s2", True)
    *vertices, skeleton = path
    return PropertyVerdict("seq_s2", False, {"link_path": vertices, "skeleton": skeleton})


@lru_cache(maxsize=200000)
def _seq_s2_failure(c: SimplicialComplex):
    """None if sequentially S_2, else (v1, v2, ..., skeleton index).

    The v's are vertex ids inside successive re-indexed links.
    """
    if c.is_void or c.is_irrelevant or c.dim == 0 and size(c.vertex_mask) <= 1:
        return None
    for i in range(1, c.dim + 1):
        if not is_connected(pure_skeleton(c, i)):
            return (i,)
    for v in members(c.vertex_mask):
        sub = _seq_s2_failure(link(c, 1 << v))
        if sub is not None:
            return (v,) + sub
    return None


def oracle_unavailable(name: str) -> PropertyVerdict:
    return PropertyVerdict(name, False, method="unavailable", note="oracle unavailable")
