import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kcert.dsu import DisjointSets
from kcert.graph import MemoryBudget, SparseGraph, connected_components


def test_add_edge():
    g = SparseGraph(3)
    assert g.add_edge(0, 1)
    assert g.edge_count == 1
    assert not g.add_edge(0, 1)
    assert not g.add_edge(1, 0)
    assert g.edge_count == 1
    assert not g.add_edge(2, 2)


def test_remove_edge():
    g = SparseGraph(3)
    g.add_edge(0, 1)
    assert g.remove_edge(1, 0)
    assert g.edge_count == 0
    assert not g.remove_edge(0, 1)
    assert not g.remove_edge(1, 2)


@pytest.mark.parametrize("op", ["add_edge", "remove_edge", "has_edge"])
def test_out_of_range(op):
    with pytest.raises(IndexError):
        getattr(SparseGraph(3), op)(0, 3)


def test_neighbors_sorted():
    g = SparseGraph(6)
    for v in (5, 2, 4, 1):
        g.add_edge(0, v)
    assert g.neighbors(0) == [1, 2, 4, 5]


def test_components():
    assert connected_components(SparseGraph(4)) == ([0, 1, 2, 3], 4)
    g = SparseGraph.from_edges(4, [(1, 2), (0, 1)])
    assert connected_components(g) == ([0, 0, 0, 1], 2)


def test_components_with_removed():
    g = SparseGraph.from_edges(3, [(0, 1), (1, 2)])
    labels, count = connected_components(g, [1])
    assert count == 2 and labels[1] == -1


def test_without_vertices():
    g = SparseGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    h = g.without_vertices([2])
    assert h.edge_set() == {(0, 1)}


def test_words_and_budget():
    g = SparseGraph.from_edges(4, [(0, 1), (1, 2)])
    assert g.words == 4 + 4
    b = MemoryBudget(word_limit=10)
    b.record(7)
    b.record(3)
    assert b.peak_words == 7 and not b.exceeded
    b.record(11)
    assert b.exceeded
    assert MemoryBudget.semi_streaming_limit(10, 3) == 4 * 3 * 10 + 80


ops = st.lists(st.tuples(st.booleans(), st.integers(0, 7), st.integers(0, 7)), max_size=60)


@settings(max_examples=100, deadline=None)
@given(ops)
def test_edge_count_tracks_set(seq):
    g = SparseGraph(8)
    model = set()
    for insert, u, v in seq:
        key = (min(u, v), max(u, v))
        if insert:
            assert g.add_edge(u, v) == (u != v and key not in model)
            if u != v:
                model.add(key)
        else:
            assert g.remove_edge(u, v) == (key in model)
            model.discard(key)
    assert g.edge_count == len(model)
    assert g.edge_set() == model
    assert g.edge_count == sum(len(a) for a in g.adj) // 2
    for u in range(8):
        for v in g.neighbors(u):
            assert u in g.neighbors(v)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)), max_size=40))
def test_spanning_forest_has_same_component_count(edges):
    g = SparseGraph.from_edges(10, edges)
    d = DisjointSets(10)
    forest = SparseGraph(10)
    for u, v in g.edges():
        if d.union(u, v):
            forest.add_edge(u, v)
    assert connected_components(forest)[1] == connected_components(g)[1]
    assert connected_components(forest)[0] == connected_components(g)[0]
