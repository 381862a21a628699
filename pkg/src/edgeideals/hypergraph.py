"""Simple hypergraphs, complete multipartite constructors and minors."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .bits import (
    drop_vertex,
    compress,
    full,
    is_antichain,
    is_subset,
    mask_of,
    members,
    minimal_sets,
    size,
    sort_key,
)
from .complex import SimplicialComplex
from .errors import EdgelessError, IsolatedEdgeContraction, ValidationError
from .transversals import berge_transversals


@dataclass(frozen=True)
class PartiteSpec:
    """Complete ``s``-uniform hypergraph on sides of the given sizes (sorted ascending)."""

    s: int
    sides: tuple[int, ...]

    def __post_init__(self):
        sides = tuple(sorted(int(x) for x in self.sides))
        object.__setattr__(self, "sides", sides)
        if self.s < 2:
            raise ValidationError(f"uniformity s={self.s} must be at least 2")
        if self.s > len(sides):
            raise ValidationError(f"s={self.s} exceeds the number of sides t={len(sides)}")
        if any(x < 1 for x in sides):
            raise ValidationError("side sizes must be positive")

    @property
    def t(self) -> int:
        return len(self.sides)

    @property
    def n(self) -> int:
        return sum(self.sides)

    def is_balanced(self) -> bool:
        return len(set(self.sides)) == 1

    def singleton_sides(self) -> int:
        return sum(1 for x in self.sides if x == 1)

    def side_masks(self) -> list[int]:
        out, start = [], 0
        for k in self.sides:
            out.append(full(k) << start)
            start += k
        return out

    def label(self) -> str:
        return f"s={self.s} sides={list(self.sides)}"


@dataclass(frozen=True)
class Hypergraph:
    """Vertex ids ``0..n-1`` and an antichain of nonempty edges (bitmasks).

    ``labels`` names the vertices; minors keep the labels of surviving
    vertices so different deletion/contraction paths can be compared.
    Uncovered vertices are allowed.
    """

    n: int
    edges: tuple[int, ...]
    labels: tuple = field(default=None, compare=False)

    def __post_init__(self):
        edges = tuple(sorted(set(self.edges), key=sort_key))
        object.__setattr__(self, "edges", edges)
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(self.n)))
        elif len(self.labels) != self.n:
            raise ValidationError("one label per vertex required")
        for e in edges:
            if e == 0:
                raise ValidationError("edges must be nonempty")
            if e >> self.n:
                raise ValidationError(f"edge {members(e)} outside [0, {self.n})")
        if not is_antichain(edges):
            raise ValidationError("edges must form an antichain (simple hypergraph)")

    def edge_lists(self) -> list[list[int]]:
        return [members(e) for e in self.edges]

    def key(self) -> tuple:
        """Exact labelled identity: surviving labels and edges in label terms."""
        return (
            self.labels,
            tuple(sorted(tuple(sorted(self.labels[v] for v in members(e))) for e in self.edges)),
        )

    def __repr__(self):
        body = ", ".join("{" + ",".join(map(str, members(e))) + "}" for e in self.edges)
        return f"Hypergraph(n={self.n}, [{body}])"


def hypergraph(n: int, edges: Iterable[Iterable[int]], labels: Sequence | None = None) -> Hypergraph:
    return Hypergraph(n, tuple(mask_of(e) for e in edges), None if labels is None else tuple(labels))


def complete_multipartite(spec: PartiteSpec) -> Hypergraph:
    """One vertex from each of ``s`` distinct sides, every such choice an edge.

    Vertices are numbered side by side in ascending side-size order.
    """
    sides = [members(m) for m in spec.side_masks()]
    edges = []
    for chosen in itertools.combinations(sides, spec.s):
        for pick in itertools.product(*chosen):
            edges.append(mask_of(pick))
    return Hypergraph(spec.n, tuple(edges))


def _check_vertex(h: Hypergraph, v: int):
    if not 0 <= v < h.n:
        raise ValidationError(f"vertex {v} not in [0, {h.n})")


def induced_subhypergraph(h: Hypergraph, subset: int) -> Hypergraph:
    if subset >> h.n:
        raise ValidationError("subset not inside the vertex set")
    return Hypergraph(
        size(subset),
        tuple(compress(e, subset) for e in h.edges if is_subset(e, subset)),
        tuple(h.labels[v] for v in members(subset)),
    )


def _without(labels: tuple, v: int) -> tuple:
    return labels[:v] + labels[v + 1:]


def deletion(h: Hypergraph, v: int) -> Hypergraph:
    _check_vertex(h, v)
    bit = 1 << v
    return Hypergraph(
        h.n - 1,
        tuple(drop_vertex(e, v) for e in h.edges if not e & bit),
        _without(h.labels, v),
    )


def contraction(h: Hypergraph, v: int) -> Hypergraph:
    _check_vertex(h, v)
    bit = 1 << v
    if bit in h.edges:
        raise IsolatedEdgeContraction(f"vertex {v} is itself an edge; contraction would give the unit ideal")
    shrunk = minimal_sets(e & ~bit for e in h.edges)
    return Hypergraph(h.n - 1, tuple(drop_vertex(e, v) for e in shrunk), _without(h.labels, v))


def one_step_minors(h: Hypergraph) -> Iterator[Hypergraph]:
    for v in range(h.n):
        yield deletion(h, v)
        if (1 << v) not in h.edges:
            yield contraction(h, v)


def minors(h: Hypergraph) -> Iterator[Hypergraph]:
    """Every labelled minor of ``h`` (itself included), each exactly once.

    Contractions of a vertex that is itself an edge are skipped.
    """
    seen = {h.key()}
    stack = [h]
    while stack:
        g = stack.pop()
        yield g
        for m in one_step_minors(g):
            k = m.key()
            if k not in seen:
                seen.add(k)
                stack.append(m)


def transversal_hypergraph(h: Hypergraph) -> Hypergraph:
    """Minimal transversals of ``h`` as a hypergraph on the same vertices."""
    if not h.edges:
        raise EdgelessError("transversal undefined for edgeless hypergraph")
    return Hypergraph(h.n, tuple(berge_transversals(h.edges)), h.labels)


def independence_complex(h: Hypergraph) -> SimplicialComplex:
    """Maximal independent sets = complements of minimal transversals."""
    if not h.edges:
        return SimplicialComplex(h.n, (full(h.n),))
    return SimplicialComplex.from_masks(
        h.n, (full(h.n) & ~t for t in berge_transversals(h.edges))
    )


def numbers(h: Hypergraph) -> tuple[int, int]:
    """(transversal number, independence number)."""
    trs = transversal_hypergraph(h).edges
    tau = min(size(t) for t in trs)
    ind = h.n - tau  # largest independent set is the complement of a smallest transversal
    return tau, ind


def is_simplicial_vertex(h: Hypergraph, v: int) -> bool:
    _check_vertex(h, v)
    bit = 1 << v
    through = [e for e in h.edges if e & bit]
    for a, b in itertools.combinations(through, 2):
        room = (a | b) & ~bit
        if not any(is_subset(e, room) for e in h.edges):
            return False
    return True


def simplicial_vertices(h: Hypergraph) -> list[int]:
    return [v for v in range(h.n) if is_simplicial_vertex(h, v)]


@dataclass
class ChordalResult:
    chordal: bool
    # minor key -> label of a simplicial vertex, for every minor visited
    trace: dict = field(default_factory=dict)
    failing_minor: Hypergraph | None = None
    states: int = 0
    memo_hits: int = 0

    def __bool__(self):
        return self.chordal


def chordality(h: Hypergraph) -> ChordalResult:
    """Check that every minor has a simplicial vertex, depth-first with a memo."""
    res = ChordalResult(True)
    done: set = set()
    stack = [h]
    while stack:
        g = stack.pop()
        k = g.key()
        if k in done:
            res.memo_hits += 1
            continue
        done.add(k)
        res.states += 1
        if g.edges:
            sv = next((v for v in range(g.n) if is_simplicial_vertex(g, v)), None)
            if sv is None:
                res.chordal = False
                res.failing_minor = g
                return res
            res.trace[k] = g.labels[sv]
        else:
            res.trace[k] = None
            continue  # everything below an edgeless minor is edgeless
        for m in one_step_minors(g):
            if m.key() in done:
                res.memo_hits += 1
            else:
                stack.append(m)
    return res


def is_chordal(h: Hypergraph) -> bool:
    return chordality(h).chordal


def spec_invariants(spec: PartiteSpec) -> dict[str, int]:
    """Closed forms for dim R/I, height, transversal and independence numbers."""
    k = spec.t - spec.s + 1
    tau = sum(spec.sides[:k])
    ind = sum(spec.sides[k:])
    return {"dim": ind, "ht": tau, "tau": tau, "ind": ind}
