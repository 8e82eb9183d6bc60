import random
from itertools import combinations

import pytest

from kcert.cert_a1 import A1State, a1_feed, a1_run
from kcert.dsu import DisjointSets
from kcert.graph import SparseGraph
from kcert.oracle import oracle_k_connected, oracle_local_connectivity
from kcert.stream_io import open_stream


def naive_a1(n, k, edges):
    """The keep rule restated with exact uncapped path counting."""
    cert = SparseGraph(n)
    for u, v in edges:
        if u == v or cert.has_edge(u, v):
            continue
        if oracle_local_connectivity(cert, u, v) <= k - 1:
            cert.add_edge(u, v)
    return cert


def test_first_edge_kept():
    s = A1State(3, 2)
    assert a1_feed(s, 0, 1)


def test_k1_is_spanning_forest():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(2, 15)
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.3]
        rng.shuffle(edges)
        s = A1State(n, 1)
        d = DisjointSets(n)
        for u, v in edges:
            assert s.feed(u, v) == d.union(u, v)


def test_k4_lexicographic_k2():
    edges = list(combinations(range(4), 2))
    s = A1State(4, 2)
    kept = [e for e in edges if s.feed(*e)]
    expected = naive_a1(4, 2, edges)
    assert len(kept) == expected.edge_count == 5
    assert (2, 3) not in kept
    assert s.cert == expected


def test_k6_all_edges_kept():
    s = A1State(6, 5)
    for u, v in combinations(range(6), 2):
        s.feed(u, v)
    assert s.cert.edge_count == 15


def test_two_triangles_not_2_connected(stream_file):
    path = stream_file(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    cert = a1_run(open_stream(path), 2)
    assert not oracle_k_connected(cert, 2)


def test_dirty_input():
    s = A1State(3, 2)
    assert not s.feed(1, 1)
    assert s.feed(0, 1)
    assert not s.feed(1, 0)
    assert s.self_loops == 1 and s.duplicates == 1
    with pytest.raises(IndexError):
        s.feed(0, 3)


def test_invalid_k():
    with pytest.raises(ValueError):
        A1State(3, 0)


def test_single_pass(stream_file):
    path = stream_file(5, list(combinations(range(5), 2)))
    stream = open_stream(path)
    a1_run(stream, 3)
    assert stream.pass_index == 1
    with pytest.raises(ValueError):
        a1_run(stream, 3)


def test_matches_naive_rule_and_preserves_kappa():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(4, 10)
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.6]
        rng.shuffle(edges)
        g = SparseGraph.from_edges(n, edges)
        for k in range(1, 5):
            s = A1State(n, k)
            for u, v in edges:
                s.feed(u, v)
                assert s.cert.edge_count <= 2 * k * n
            assert s.cert == naive_a1(n, k, edges)
            for x, y in combinations(range(n), 2):
                assert min(oracle_local_connectivity(s.cert, x, y), k) == min(oracle_local_connectivity(g, x, y), k)
