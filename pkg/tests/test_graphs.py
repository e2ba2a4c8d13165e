import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpcolor.errors import (
    BadLengthError,
    DuplicateEdgeError,
    IndexOutOfRangeError,
    LoopEdgeError,
    OverlappingSetsError,
)
from dpcolor.graphs import (
    build_graph,
    cross_edges,
    has_cycle_of_length,
    induced_subgraph,
    is_connected,
    list_cycles,
)

from oracles import subset_cycles
from strategies import graphs

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

PETERSEN_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]          # outer 5-cycle
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]  # inner pentagram
    + [(i, i + 5) for i in range(5)]              # spokes
)


def test_triangle_degrees():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.degrees() == (2, 2, 2)
    assert g.edges == ((0, 1), (0, 2), (1, 2))


def test_k4_degrees():
    g = build_graph(4, K4_EDGES)
    assert g.degrees() == (3, 3, 3, 3)
    assert g.m == 6


def test_loop_rejected():
    with pytest.raises(LoopEdgeError):
        build_graph(2, [(0, 0)])


def test_duplicate_rejected():
    with pytest.raises(DuplicateEdgeError):
        build_graph(3, [(0, 1), (1, 0)])


def test_out_of_range_rejected():
    with pytest.raises(IndexOutOfRangeError):
        build_graph(2, [(0, 2)])


def test_induced_subgraph_of_k4():
    sub, vertices = induced_subgraph(build_graph(4, K4_EDGES), [0, 1, 2])
    assert vertices == (0, 1, 2)
    assert sub.edges == ((0, 1), (0, 2), (1, 2))


def test_induced_subgraph_empty_set():
    sub, vertices = induced_subgraph(build_graph(4, K4_EDGES), [])
    assert vertices == () and sub.n == 0 and sub.m == 0


def test_induced_subgraph_of_c5():
    c5 = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    sub, vertices = induced_subgraph(c5, [0, 1, 3])
    assert vertices == (0, 1, 3)
    assert sub.edges == ((0, 1),)


def test_induced_subgraph_full_is_identity():
    g = build_graph(4, K4_EDGES)
    sub, vertices = induced_subgraph(g, range(4))
    assert sub == g and vertices == (0, 1, 2, 3)


def test_cross_edges_k4():
    g = build_graph(4, K4_EDGES)
    assert cross_edges(g, [0], [1, 2]) == [(0, 1), (0, 2)]


def test_cross_edges_c4_opposite():
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert cross_edges(c4, [0], [2]) == []


def test_cross_edges_overlap_rejected():
    g = build_graph(4, K4_EDGES)
    with pytest.raises(OverlappingSetsError):
        cross_edges(g, [0], [0, 1])


def test_c4_has_4_cycle():
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert has_cycle_of_length(c4, 4)
    assert list_cycles(c4, 4) == [(0, 1, 2, 3)]


def test_k3_has_no_4_cycle():
    k3 = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert not has_cycle_of_length(k3, 4)


def test_bad_length_rejected():
    k3 = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(BadLengthError):
        has_cycle_of_length(k3, 2)


def test_petersen_cycles_against_subset_oracle():
    petersen = build_graph(10, PETERSEN_EDGES)
    for k in (4, 5, 6):
        assert list_cycles(petersen, k) == subset_cycles(petersen, k)
    # expected values frozen from the subset/permutation oracle
    assert not has_cycle_of_length(petersen, 4)
    assert len(list_cycles(petersen, 5)) == 12
    assert has_cycle_of_length(petersen, 6)
    assert len(list_cycles(petersen, 6)) == 10


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8), st.integers(min_value=3, max_value=8))
def test_list_cycles_matches_subset_oracle(g, k):
    assert list_cycles(g, k) == subset_cycles(g, k)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8), st.integers(min_value=3, max_value=8))
def test_has_cycle_iff_list_nonempty(g, k):
    assert has_cycle_of_length(g, k) == bool(list_cycles(g, k))


def test_is_connected():
    assert is_connected(build_graph(1, []))
    assert is_connected(build_graph(0, []))
    assert not is_connected(build_graph(2, []))
    assert is_connected(build_graph(2, [(0, 1)]))
