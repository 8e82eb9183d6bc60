from itertools import combinations

import pytest

from kcert.graph import SparseGraph
from kcert.oracle import (
    MODELS,
    Corpus,
    default_corpus,
    generate,
    oracle_all_separators,
    oracle_k_connected,
    oracle_local_connectivity,
    oracle_sfs_forest,
)


def complete(n):
    return SparseGraph.from_edges(n, combinations(range(n), 2))


def cycle(n):
    return SparseGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_k_connected_examples():
    assert oracle_k_connected(complete(4), 3)
    g = complete(4)
    g.remove_edge(0, 1)
    assert not oracle_k_connected(g, 3)
    assert oracle_k_connected(cycle(6), 2)
    assert not oracle_k_connected(cycle(6), 3)


def test_local_connectivity_examples():
    assert oracle_local_connectivity(cycle(6), 0, 3) == 2
    assert oracle_local_connectivity(complete(5), 0, 1) == 4
    assert oracle_local_connectivity(SparseGraph.from_edges(4, [(0, 1), (2, 3)]), 0, 3) == 0


def test_separators_examples():
    assert [s.vertices for s in oracle_all_separators(cycle(4), 3)] == [(0, 2), (1, 3)]
    path3 = SparseGraph.from_edges(3, [(0, 1), (1, 2)])
    assert [s.vertices for s in oracle_all_separators(path3, 3)] == [(1,)]


def test_sfs_forest_on_triangle():
    assert oracle_sfs_forest(3, [(1, 2), (0, 2), (0, 1)], [0, 1, 2]) == {(0, 1), (0, 2)}
    assert oracle_sfs_forest(3, [(0, 1), (0, 2), (1, 2)], [2, 1, 0]) == {(1, 2), (0, 2)}


def test_generators():
    g, order = generate("complete", {"n": 5}, 1)
    assert g.edge_count == 10 and len(order) == 10
    g, _ = generate("circulant", {"n": 10, "offsets": (1, 2)}, 1)
    assert oracle_k_connected(g, 4) and not oracle_k_connected(g, 5)
    g, _ = generate("gnp", {"n": 8, "p": 0.0}, 1)
    assert g.edge_count == 0
    g, _ = generate("two_blocks", {"n": 10, "p": 1.0, "separator_size": 2}, 3)
    assert not oracle_k_connected(g, 3)


def test_stream_order_is_a_permutation():
    g, order = generate("gnp", {"n": 12, "p": 0.5}, 7)
    assert sorted((min(e), max(e)) for e in order) == list(g.edges())


def test_reproducible_bytes(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    generate("gnp", {"n": 15, "p": 0.4}, 99, path=str(a))
    generate("gnp", {"n": 15, "p": 0.4}, 99, path=str(b))
    assert a.read_bytes() == b.read_bytes()
    c = tmp_path / "c.txt"
    generate("gnp", {"n": 15, "p": 0.4}, 100, path=str(c))
    assert a.read_bytes() != c.read_bytes()


@pytest.mark.parametrize(
    "model, params",
    [
        ("gnp", {"n": 5, "p": 1.5}),
        ("cycle", {"n": 2}),
        ("circulant", {"n": 10, "offsets": (6,)}),
        ("circulant", {"n": 10}),
        ("two_blocks", {"n": 4, "separator_size": 3}),
        ("gnp", {"n": -1}),
        ("petersen", {"n": 10}),
    ],
)
def test_invalid_params(model, params):
    with pytest.raises(ValueError):
        generate(model, params, 1)


def test_default_corpus():
    corpus = default_corpus()
    assert len(corpus) == 210
    assert {c.model for c in corpus} == set(MODELS)
    assert all(8 <= c.n <= 25 or c.model == "complete" for c in corpus)
    assert len({c.label() for c in corpus}) == len(corpus)
    assert Corpus("gnp", 8, seed=1).build()[0] == Corpus("gnp", 8, seed=1).build()[0]
