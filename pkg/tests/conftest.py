import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from edgeideals.bits import mask_of, minimal_sets  # noqa: E402
from edgeideals.complex import SimplicialComplex  # noqa: E402
from edgeideals.hypergraph import Hypergraph, PartiteSpec, complete_multipartite  # noqa: E402


@st.composite
def hypergraphs(draw, max_n=6, max_edges=6):
    n = draw(st.integers(1, max_n))
    raw = draw(
        st.lists(st.sets(st.integers(0, n - 1), min_size=1, max_size=n), min_size=0, max_size=max_edges)
    )
    return Hypergraph(n, tuple(minimal_sets(mask_of(e) for e in raw)))


@st.composite
def complexes(draw, max_n=6, max_facets=5):
    n = draw(st.integers(1, max_n))
    raw = draw(
        st.lists(st.sets(st.integers(0, n - 1), min_size=0, max_size=n), min_size=1, max_size=max_facets)
    )
    return SimplicialComplex.from_masks(n, (mask_of(f) for f in raw))


@st.composite
def partite_specs(draw, max_t=5, max_side=3, max_n=9):
    t = draw(st.integers(2, max_t))
    sides = draw(st.lists(st.integers(1, max_side), min_size=t, max_size=t))
    if sum(sides) > max_n:
        sides = [1] * t
    s = draw(st.integers(2, t))
    return PartiteSpec(s, tuple(sides))


@pytest.fixture
def c4():
    return complete_multipartite(PartiteSpec(2, (2, 2)))


@pytest.fixture
def k3():
    return complete_multipartite(PartiteSpec(2, (1, 1, 1)))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
