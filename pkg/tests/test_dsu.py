import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kcert.dsu import DisjointSets, make


def test_make():
    d = make(3)
    assert d.set_count == 3
    assert [d.find(i) for i in range(3)] == [0, 1, 2]
    assert make(0).set_count == 0
    assert make(1).find(0) == 0


def test_union_and_find():
    d = make(3)
    assert d.union(0, 1)
    assert d.set_count == 2
    assert d.find(0) == d.find(1)
    assert not d.union(0, 1)
    assert d.find(2) == 2
    assert d.find(d.find(0)) == d.find(0)


def test_n_minus_one_unions():
    d = make(6)
    for i in range(5):
        assert d.union(i, i + 1)
    assert d.set_count == 1


def test_equal_rank_tie_goes_to_smaller_id():
    d = make(4)
    d.union(3, 1)
    assert d.find(3) == 1
    d.union(2, 0)
    d.union(2, 3)
    assert d.find(1) == 0


def test_out_of_range():
    with pytest.raises(IndexError):
        make(2).find(2)
    with pytest.raises(IndexError):
        make(2).union(0, 5)


def _naive_partition(n, unions):
    label = list(range(n))
    for x, y in unions:
        lx, ly = label[x], label[y]
        if lx != ly:
            label = [lx if lab == ly else lab for lab in label]
    return label


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 20).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=40))))
def test_partition_matches_label_propagation(data):
    n, unions = data
    d = make(n)
    for x, y in unions:
        d.union(x, y)
    naive = _naive_partition(n, unions)
    for a in range(n):
        for b in range(n):
            assert (d.find(a) == d.find(b)) == (naive[a] == naive[b])
    assert d.set_count == len(set(naive))
    roots = [x for x in range(n) if d.parent[x] == x]
    assert len(roots) == d.set_count


def _chain_hops_per_op(n):
    # union pairs bottom-up to build tall trees, then query every leaf
    d = make(n)
    size = 1
    while size < n:
        for start in range(0, n - size, 2 * size):
            d.union(start + size, start)
        size *= 2
    before_finds, before_hops = d.finds, d.hops
    for _ in range(3):
        for x in range(n - 1, -1, -1):
            d.find(x)
    finds = d.finds - before_finds
    return (d.hops - before_hops) / finds


def test_amortized_hops_grow_sub_logarithmically():
    small = _chain_hops_per_op(2**8)
    large = _chain_hops_per_op(2**14)
    # log2 n grows by a factor 14/8; compressed finds must grow by far less
    assert large < 2.0
    assert large / max(small, 1e-9) < math.log2(2**14) / math.log2(2**8)
