import itertools
import math

import pytest
from hypothesis import given, settings

from conftest import hypergraphs, partite_specs
from oracles import brute_max_independent, brute_min_transversals

from edgeideals.bits import full, is_antichain, mask_of, members
from edgeideals.errors import EdgelessError, IsolatedEdgeContraction, ValidationError
from edgeideals.hypergraph import (
    Hypergraph,
    PartiteSpec,
    chordality,
    complete_multipartite,
    contraction,
    deletion,
    hypergraph,
    independence_complex,
    induced_subhypergraph,
    is_chordal,
    is_simplicial_vertex,
    minors,
    numbers,
    spec_invariants,
    transversal_hypergraph,
)


def sets(masks):
    return sorted(members(m) for m in masks)


# ---------------------------------------------------------------- constructors


def test_k3():
    h = complete_multipartite(PartiteSpec(2, (1, 1, 1)))
    assert sets(h.edges) == [[0, 1], [0, 2], [1, 2]]


def test_two_edge_hypergraph():
    h = complete_multipartite(PartiteSpec(3, (1, 1, 2)))
    assert sets(h.edges) == [[0, 1, 2], [0, 1, 3]]


def test_c4():
    h = complete_multipartite(PartiteSpec(2, (2, 2)))
    assert sets(h.edges) == [[0, 2], [0, 3], [1, 2], [1, 3]]


def test_sides_are_sorted():
    assert PartiteSpec(2, (3, 1, 2)).sides == (1, 2, 3)


@pytest.mark.parametrize("s, sides", [(1, (1, 1)), (3, (1, 1)), (2, (0, 1)), (2, (1,))])
def test_invalid_spec(s, sides):
    with pytest.raises(ValidationError):
        PartiteSpec(s, sides)


@given(partite_specs())
def test_edge_count(spec):
    h = complete_multipartite(spec)
    expected = sum(math.prod(c) for c in itertools.combinations(spec.sides, spec.s))
    assert len(h.edges) == expected
    assert h.n == spec.n


def test_non_antichain_rejected():
    with pytest.raises(ValidationError):
        hypergraph(3, [[0], [0, 1]])


# ---------------------------------------------------------------- minors


def test_induced(c4):
    assert sets(induced_subhypergraph(c4, mask_of([0, 2])).edges) == [[0, 1]]
    assert induced_subhypergraph(c4, mask_of([0, 2])).labels == (0, 2)
    assert induced_subhypergraph(c4, mask_of([0, 1])).edges == ()
    assert induced_subhypergraph(c4, full(4)) == c4


def test_deletion(k3, c4):
    assert sets(deletion(k3, 0).edges) == [[0, 1]]  # {1,2} re-indexed
    assert deletion(k3, 0).labels == (1, 2)
    d = deletion(c4, 0)
    assert [[d.labels[v] for v in e] for e in sets(d.edges)] == [[1, 2], [1, 3]]
    one = hypergraph(3, [[0, 1, 2]])
    assert deletion(one, 0).edges == () and deletion(one, 0).n == 2


def test_contraction(k3):
    g = contraction(k3, 0)
    assert [[g.labels[v] for v in e] for e in sets(g.edges)] == [[1], [2]]
    two = complete_multipartite(PartiteSpec(3, (1, 1, 2)))
    g = contraction(two, 0)
    assert [[g.labels[v] for v in e] for e in sets(g.edges)] == [[1, 2], [1, 3]]
    g = contraction(hypergraph(2, [[0, 1]]), 0)
    assert g.labels == (1,) and sets(g.edges) == [[0]]


def test_contraction_of_isolated_edge():
    with pytest.raises(IsolatedEdgeContraction):
        contraction(hypergraph(2, [[0], [1]]), 0)


def test_vertex_out_of_range(k3):
    with pytest.raises(ValidationError):
        deletion(k3, 3)


def test_minors_single_edge():
    # keep/delete/contract per vertex; contracting the second vertex is refused
    # once it is a singleton edge. Besides the 5 nonempty states the fully
    # deleted, zero-vertex hypergraph also appears.
    h = hypergraph(2, [[0, 1]])
    keys = {m.key() for m in minors(h)}
    assert keys == {
        ((0, 1), ((0, 1),)),
        ((1,), ((1,),)),
        ((0,), ((0,),)),
        ((1,), ()),
        ((0,), ()),
        ((), ()),
    }


def test_minors_edgeless_point():
    h = Hypergraph(1, ())
    assert {m.key() for m in minors(h)} == {((0,), ()), ((), ())}


def test_minors_k3_contains_path():
    keys = {m.key() for m in minors(complete_multipartite(PartiteSpec(2, (1, 1, 1))))}
    assert ((0, 1, 2), ((0, 1), (0, 2), (1, 2))) in keys
    assert ((1, 2), ((1, 2),)) in keys


@given(hypergraphs(max_n=5))
@settings(max_examples=40)
def test_minors_are_simple(h):
    for m in minors(h):
        assert is_antichain(m.edges)


@given(hypergraphs(max_n=5))
@settings(max_examples=40)
def test_deletion_contraction_commute(h):
    for u, v in itertools.permutations(range(h.n), 2):
        a = deletion(deletion(h, u), v - (v > u))
        b = deletion(deletion(h, v), u - (u > v))
        assert a.key() == b.key()
        if (1 << v) in h.edges:
            continue
        try:
            c1 = contraction(deletion(h, u), v - (v > u))
        except IsolatedEdgeContraction:
            continue
        c2 = deletion(contraction(h, v), u - (u > v))
        assert c1.key() == c2.key()


# ---------------------------------------------------------------- transversals


def test_transversals_examples(c4, k3):
    assert sets(transversal_hypergraph(c4).edges) == [[0, 1], [2, 3]]
    assert sets(transversal_hypergraph(k3).edges) == [[0, 1], [0, 2], [1, 2]]
    assert sets(transversal_hypergraph(hypergraph(3, [[0, 1, 2]])).edges) == [[0], [1], [2]]


def test_transversal_of_edgeless():
    with pytest.raises(EdgelessError):
        transversal_hypergraph(Hypergraph(3, ()))
    with pytest.raises(EdgelessError):
        numbers(Hypergraph(3, ()))


@given(hypergraphs())
def test_transversals_match_brute_force(h):
    if not h.edges:
        return
    got = {frozenset(members(t)) for t in transversal_hypergraph(h).edges}
    assert got == brute_min_transversals(h.n, h.edge_lists())


@given(hypergraphs())
def test_independence_duality(h):
    facets = {frozenset(members(f)) for f in independence_complex(h).facets}
    assert facets == brute_max_independent(h.n, h.edge_lists())
    if h.edges:
        trs = set(transversal_hypergraph(h).edges)
        assert {full(h.n) & ~f for f in independence_complex(h).facets} == trs


def test_independence_examples(c4, k3):
    assert sets(independence_complex(c4).facets) == [[0, 1], [2, 3]]
    tri = complete_multipartite(PartiteSpec(3, (1, 1, 1)))
    assert sets(independence_complex(tri).facets) == [[0, 1], [0, 2], [1, 2]]
    assert sets(independence_complex(k3).facets) == [[0], [1], [2]]
    assert independence_complex(Hypergraph(3, ())).facets == (0b111,)


def test_numbers_examples(c4, k3):
    assert numbers(c4) == (2, 2)
    assert numbers(complete_multipartite(PartiteSpec(3, (1, 1, 2)))) == (1, 3)
    assert numbers(k3) == (2, 1)


@given(partite_specs())
def test_closed_form_numbers(spec):
    h = complete_multipartite(spec)
    inv = spec_invariants(spec)
    assert numbers(h) == (inv["tau"], inv["ind"])
    assert independence_complex(h).dim + 1 == inv["dim"]
    unions = {sum(c) for c in itertools.combinations(spec.side_masks(), spec.t - spec.s + 1)}
    assert set(transversal_hypergraph(h).edges) == unions


def test_spec_invariants_examples():
    assert spec_invariants(PartiteSpec(2, (2, 2)))["dim"] == 2
    assert spec_invariants(PartiteSpec(2, (2, 2)))["ht"] == 2
    inv = spec_invariants(PartiteSpec(3, (1, 1, 2)))
    assert (inv["ht"], inv["dim"]) == (1, 3)
    inv = spec_invariants(PartiteSpec(4, (1, 1, 1, 1)))
    assert (inv["ht"], inv["dim"]) == (1, 3)


# ---------------------------------------------------------------- chordality


def test_simplicial_vertices(k3, c4):
    assert all(is_simplicial_vertex(k3, v) for v in range(3))
    assert not any(is_simplicial_vertex(c4, v) for v in range(4))
    assert is_simplicial_vertex(hypergraph(3, [[0, 1, 2]]), 0)


def test_chordal_examples(c4):
    assert is_chordal(complete_multipartite(PartiteSpec(2, (1, 1, 3))))
    assert not is_chordal(c4)
    assert is_chordal(complete_multipartite(PartiteSpec(3, (1, 1, 1, 1))))


def test_chordal_trace_and_memo():
    res = chordality(complete_multipartite(PartiteSpec(2, (1, 1, 2))))
    assert res.chordal
    assert res.memo_hits > 0
    for key, v in res.trace.items():
        labels, edges = key
        if edges:
            g = hypergraph(
                len(labels),
                [[labels.index(x) for x in e] for e in edges],
                labels,
            )
            assert is_simplicial_vertex(g, labels.index(v))


def test_chordal_failing_minor_has_no_simplicial_vertex(c4):
    res = chordality(c4)
    assert not res.chordal
    g = res.failing_minor
    assert not any(is_simplicial_vertex(g, v) for v in range(g.n))
