"""Finite abstract simplicial complexes stored by their facets.

Faces are bitmasks over the vertex ids ``0 .. n-1``. Two degenerate complexes
are kept apart: ``VOID`` has no faces at all, ``IRRELEVANT`` has only the
empty face.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .bits import (
    compress,
    full,
    is_subset,
    mask_of,
    maximal_sets,
    members,
    size,
    sort_key,
    submasks,
)
from .errors import CapExceeded, ValidationError
from .transversals import berge_transversals

TIGHT_VERTEX_CAP = 12


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError("vertex count must be non-negative")
        for f in self.facets:
            if f >> self.n:
                raise ValidationError(f"facet {members(f)} outside [0, {self.n})")

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> SimplicialComplex:
        return cls(n, tuple(maximal_sets(masks)))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (0,)

    @property
    def dim(self) -> int:
        # VOID reports -1 as well; callers that care check is_void first
        if not self.facets:
            return -1
        return max(size(f) for f in self.facets) - 1

    @property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    def is_pure(self) -> bool:
        return len({size(f) for f in self.facets}) <= 1

    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    def contains(self, face: int) -> bool:
        return any(is_subset(face, f) for f in self.facets)

    def facet_lists(self) -> list[list[int]]:
        return [members(f) for f in self.facets]

    def __repr__(self):
        if self.is_void:
            return f"SimplicialComplex(n={self.n}, VOID)"
        body = ", ".join("{" + ",".join(map(str, members(f))) + "}" for f in self.facets)
        return f"SimplicialComplex(n={self.n}, <{body}>)"


def from_facets(n: int, sets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Complex generated by ``sets``; non-maximal and repeated sets are dropped."""
    masks = [mask_of(s) for s in sets]
    for m in masks:
        if m >> n:
            raise ValidationError(f"set {members(m)} not inside [0, {n})")
    return SimplicialComplex.from_masks(n, masks)


def void(n: int = 0) -> SimplicialComplex:
    return SimplicialComplex(n, ())


def irrelevant(n: int = 0) -> SimplicialComplex:
    return SimplicialComplex(n, (0,))


def simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, (full(n),))


# ---------------------------------------------------------------- faces


@lru_cache(maxsize=65536)
def all_faces(c: SimplicialComplex) -> frozenset[int]:
    out: set[int] = set()
    for f in c.facets:
        out.update(submasks(f))
    return frozenset(out)


def faces(c: SimplicialComplex, dim: int) -> list[int]:
    """Faces of dimension ``dim`` (cardinality dim+1), lexicographically sorted."""
    k = dim + 1
    return sorted((f for f in all_faces(c) if size(f) == k), key=sort_key)


def f_vector(c: SimplicialComplex) -> list[int]:
    """``[f_{-1}, f_0, ..., f_{d-1}]``; empty for VOID."""
    if c.is_void:
        return []
    counts = [0] * (c.dim + 2)
    for f in all_faces(c):
        counts[size(f)] += 1
    return counts


def reduced_euler(c: SimplicialComplex) -> int:
    return sum((-1) ** (i - 1) * fi for i, fi in enumerate(f_vector(c)))


# ---------------------------------------------------------------- local ops


def link(c: SimplicialComplex, face: int) -> SimplicialComplex:
    """Link of ``face``, re-indexed onto the vertices outside ``face``."""
    if not c.contains(face):
        raise ValidationError(f"{members(face)} is not a face")
    keep = full(c.n) & ~face
    return SimplicialComplex.from_masks(
        c.n - size(face),
        (compress(f & ~face, keep) for f in c.facets if is_subset(face, f)),
    )


def star(c: SimplicialComplex, face: int) -> SimplicialComplex:
    if not c.contains(face):
        raise ValidationError(f"{members(face)} is not a face")
    return SimplicialComplex(c.n, tuple(f for f in c.facets if is_subset(face, f)))


def vertex_deletion(c: SimplicialComplex, v: int) -> SimplicialComplex:
    """Faces avoiding ``v``, re-indexed onto the remaining ``n-1`` vertices."""
    if not 0 <= v < c.n:
        raise ValidationError(f"vertex {v} out of range")
    return induced_subcomplex(c, full(c.n) & ~(1 << v))


def induced_subcomplex(c: SimplicialComplex, subset: int) -> SimplicialComplex:
    """Faces contained in ``subset``, re-indexed onto ``subset``."""
    if subset >> c.n:
        raise ValidationError("subset not inside the vertex set")
    if c.is_void:
        return void(size(subset))
    return SimplicialComplex.from_masks(
        size(subset), (compress(f & subset, subset) for f in c.facets)
    )


def pure_skeleton(c: SimplicialComplex, i: int) -> SimplicialComplex:
    """Pure i-th skeleton: generated by all faces of cardinality i+1."""
    if not 0 <= i <= c.dim:
        raise ValidationError(f"skeleton index {i} outside [0, {c.dim}]")
    k = i + 1
    out = set()
    for f in c.facets:
        if size(f) >= k:
            for combo in itertools.combinations(members(f), k):
                out.add(mask_of(combo))
    return SimplicialComplex(c.n, tuple(sorted(out, key=sort_key)))


def is_connected(c: SimplicialComplex) -> bool:
    """Facet-path connectivity; VOID and IRRELEVANT count as connected."""
    fs = c.facets
    if len(fs) <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        a = fs[stack.pop()]
        for j, b in enumerate(fs):
            if j not in seen and a & b:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(fs)


def join(c1: SimplicialComplex, c2: SimplicialComplex) -> SimplicialComplex:
    """Join on the disjoint union; ``c2``'s vertices are shifted by ``c1.n``."""
    return SimplicialComplex.from_masks(
        c1.n + c2.n, (a | (b << c1.n) for a in c1.facets for b in c2.facets)
    )


def minimal_nonfaces(c: SimplicialComplex) -> list[int]:
    # a set is a non-face iff it meets the complement of every facet
    comps = [full(c.n) & ~f for f in c.facets]
    return berge_transversals(comps)


def alexander_dual(c: SimplicialComplex) -> SimplicialComplex:
    """{V \\ F : F not a face}; the full simplex goes to VOID."""
    if c.is_void:
        raise ValidationError("Alexander dual of the void complex is not defined here")
    nonfaces = minimal_nonfaces(c)
    return SimplicialComplex.from_masks(c.n, (full(c.n) & ~g for g in nonfaces))


def core_vertices(c: SimplicialComplex) -> int:
    """Vertices whose star is a proper subcomplex (i.e. not cone points)."""
    if c.is_void:
        return 0
    common = full(c.n)
    for f in c.facets:
        common &= f
    return c.vertex_mask & ~common


def core(c: SimplicialComplex) -> SimplicialComplex:
    return induced_subcomplex(c, core_vertices(c))


# ---------------------------------------------------------------- exchange properties


def is_matroid(c: SimplicialComplex) -> bool:
    """Exchange axiom checked over every pair of faces with |F| > |G|."""
    fs = all_faces(c)
    by_size: dict[int, list[int]] = {}
    for f in fs:
        by_size.setdefault(size(f), []).append(f)
    sizes = sorted(by_size)
    for gi, g_size in enumerate(sizes):
        for f_size in sizes[gi + 1:]:
            for g in by_size[g_size]:
                for f in by_size[f_size]:
                    diff = f & ~g
                    if not any((g | (1 << x)) in fs for x in members(diff)):
                        return False
    return True


def tight_forced_orders(c: SimplicialComplex) -> set[tuple[int, int]]:
    """Pairs (j, i) such that any tight labelling must put j before i.

    For facets G1, G2 with i in G1\\G2 and j in G2\\G1, the labelling condition
    only bites when i < j; if no j' in G1\\G2 makes (G2\\{j}) u {j'} a facet,
    the labelling has to order j below i instead.
    """
    facet_set = set(c.facets)
    forced = set()
    for g1 in c.facets:
        for g2 in c.facets:
            if g1 == g2:
                continue
            only1 = members(g1 & ~g2)
            only2 = members(g2 & ~g1)
            for j in only2:
                base = g2 & ~(1 << j)
                repairable = any((base | (1 << jp)) in facet_set for jp in only1)
                if not repairable:
                    for i in only1:
                        forced.add((j, i))
    return forced


def tight_labelling(c: SimplicialComplex, allow_large: bool = False) -> list[int] | None:
    """A vertex order witnessing tightness, or None.

    Backtracking over labellings: vertices receive labels 1, 2, ... in turn and
    a branch is pruned as soon as the chosen vertex has a forced predecessor
    that is still unlabelled. Only pure complexes can be tight.
    """
    if c.n > TIGHT_VERTEX_CAP and not allow_large:
        raise CapExceeded(
            f"tightness search over {c.n}! labellings; pass allow_large=True to override"
        )
    if not c.is_pure():
        return None
    preds: dict[int, int] = {v: 0 for v in range(c.n)}
    for j, i in tight_forced_orders(c):
        preds[i] |= 1 << j

    order: list[int] = []
    dead: set[int] = set()  # feasibility depends only on the set already labelled

    def extend(placed: int) -> bool:
        if len(order) == c.n:
            return True
        if placed in dead:
            return False
        for v in range(c.n):
            if placed >> v & 1:
                continue
            if preds[v] & ~placed:
                continue
            order.append(v)
            if extend(placed | (1 << v)):
                return True
            order.pop()
        dead.add(placed)
        return False

    return list(order) if extend(0) else None


def is_tight(c: SimplicialComplex, allow_large: bool = False) -> bool:
    return tight_labelling(c, allow_large) is not None


def satisfies_tight_condition(c: SimplicialComplex, order: Sequence[int]) -> bool:
    """Check the raw labelling condition for a given vertex order."""
    label = {v: k for k, v in enumerate(order)}
    facet_set = set(c.facets)
    for g1 in c.facets:
        for g2 in c.facets:
            only1 = members(g1 & ~g2)
            only2 = members(g2 & ~g1)
            for i in only1:
                for j in only2:
                    if label[i] < label[j]:
                        base = g2 & ~(1 << j)
                        if not any((base | (1 << jp)) in facet_set for jp in only1):
                            return False
    return True
