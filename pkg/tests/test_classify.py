import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import partite_specs

from edgeideals.algprops import (
    is_buchsbaum,
    is_cm,
    is_gorenstein,
    is_l_cm,
    is_seq_cm,
    is_unmixed,
)
from edgeideals.classify import ORACLE_PROPERTIES, classify
from edgeideals.combprops import is_vertex_decomposable
from edgeideals.errors import ValidationError
from edgeideals.hypergraph import PartiteSpec, complete_multipartite, independence_complex, is_chordal


def test_balanced_pair():
    rep = classify(PartiteSpec(2, (2, 2)))
    assert rep.unmixed and not rep.cm and rep.buchsbaum
    assert not rep.seq_cm and not rep.almost_ci


def test_l_cm_threshold():
    spec = PartiteSpec(3, (1, 1, 1, 1))
    assert classify(spec, l=3).cm and classify(spec, l=3).l_cm
    assert not classify(spec, l=4).l_cm


def test_two_edge_hypergraph():
    rep = classify(PartiteSpec(3, (1, 1, 2)))
    assert not rep.gorenstein and rep.almost_ci
    assert rep.seq_cm and rep.chordal


def test_triangle_and_single_edge():
    k3 = classify(PartiteSpec(2, (1, 1, 1)))
    assert k3.almost_ci and not k3.ci and k3.cm
    one = classify(PartiteSpec(3, (1, 1, 1)))
    assert one.ci and one.gorenstein and one.dual_ci


def test_s2_buchsbaum_split():
    spec = PartiteSpec(2, (3, 3))
    assert classify(spec, l=1).l_buchsbaum
    assert not classify(spec, l=2).l_buchsbaum
    assert classify(PartiteSpec(2, (1, 1, 1)), l=2).l_buchsbaum


def test_bad_parameters():
    with pytest.raises(ValidationError):
        classify(PartiteSpec(2, (1, 1)), l=0)
    with pytest.raises(ValidationError):
        classify(PartiteSpec(2, (1, 1)), r=1)


def test_oracle_backing_flags():
    assert classify(PartiteSpec(2, (1, 1)), r=2).oracle_backed["seq_sr"]
    assert not classify(PartiteSpec(2, (1, 1)), r=3).oracle_backed["seq_sr"]
    assert all(classify(PartiteSpec(2, (1, 1))).oracle_backed[p] for p in ORACLE_PROPERTIES)


def test_json_roundtrip():
    rep = classify(PartiteSpec(3, (2, 1, 1)), l=2)
    data = json.loads(json.dumps(rep.to_json()))
    assert data["spec"] == {"s": 3, "sides": [1, 1, 2]}
    assert data["invariants"] == rep.invariants
    assert "gorenstein/ci" in data["citations"]


@given(partite_specs(), st.integers(1, 4), st.integers(2, 4))
def test_internal_consistency(spec, l, r):
    rep = classify(spec, l, r)
    assert rep.cm == rep.sr == rep.level == rep.matroid == rep.tight
    assert rep.seq_cm == rep.seq_sr == rep.shellable == rep.vertex_decomposable == rep.chordal
    assert not rep.ci or rep.gorenstein
    assert not rep.gorenstein or rep.cm
    assert not rep.cm or (rep.unmixed and rep.seq_cm)
    assert not (rep.ci and rep.almost_ci)
    assert rep.dual_cm
    if l > 1:
        assert not classify(spec, l).l_cm or classify(spec, l - 1).l_cm


@given(partite_specs(max_t=4, max_side=2, max_n=6), st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_agrees_with_oracles_on_small_specs(spec, l):
    c = independence_complex(complete_multipartite(spec))
    rep = classify(spec, l)
    assert rep.unmixed == is_unmixed(c).value
    assert rep.cm == is_cm(c).value
    assert rep.buchsbaum == is_buchsbaum(c).value
    assert rep.l_cm == is_l_cm(c, l).value
    assert rep.gorenstein == is_gorenstein(c).value
    assert rep.seq_cm == is_seq_cm(c).value
    assert rep.vertex_decomposable == is_vertex_decomposable(c)[0]
    assert rep.chordal == is_chordal(complete_multipartite(spec))


def test_perturb_flips_balance_rules():
    spec = PartiteSpec(2, (1, 1, 1))
    assert classify(spec).cm and not classify(spec, perturb=True).cm
