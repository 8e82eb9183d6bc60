"""Union-find with path compression and union by rank."""

from __future__ import annotations


class DisjointSets:
    """Disjoint sets over ``0..n-1``.

    ``finds`` and ``hops`` count find calls and parent pointers followed;
    they feed the per-edge cost measurements and never affect results.
    """

    __slots__ = ("parent", "rank", "set_count", "finds", "hops")

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("n must be non-negative")
        self.parent = list(range(n))
        self.rank = [0] * n
        self.set_count = n
        self.finds = 0
        self.hops = 0

    def __len__(self) -> int:
        return len(self.parent)

    def find(self, x: int) -> int:
        parent = self.parent
        if not 0 <= x < len(parent):
            raise IndexError(f"element out of range: {x}")
        self.finds += 1
        root = x
        while parent[root] != root:
            root = parent[root]
            self.hops += 1
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx = self.find(x)
        ry = self.find(y)
        if rx == ry:
            return False
        rank = self.rank
        if rank[rx] < rank[ry] or (rank[rx] == rank[ry] and ry < rx):
            rx, ry = ry, rx
        self.parent[ry] = rx
        if rank[rx] == rank[ry]:
            rank[rx] += 1
        self.set_count -= 1
        return True

    @property
    def ops(self) -> int:
        return self.finds + self.hops

    @property
    def words(self) -> int:
        return 2 * len(self.parent)


def make(n: int) -> DisjointSets:
    return DisjointSets(n)
