"""Simple undirected graph used for certificates, plus word accounting."""

from __future__ import annotations

from bisect import bisect_left, insort
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class SparseGraph:
    """Simple undirected graph on vertices ``0..n-1``.

    Neighbor lists are kept sorted by id so every traversal over the graph is
    deterministic. Self-loops and parallel edges are rejected silently by
    :meth:`add_edge`.
    """

    __slots__ = ("n", "adj", "edge_count")

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.edge_count = 0

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "SparseGraph":
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def _check(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError(f"vertex out of range: ({u}, {v}) with n={self.n}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u, v)
        nbrs = self.adj[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def add_edge(self, u: int, v: int) -> bool:
        self._check(u, v)
        if u == v or self.has_edge(u, v):
            return False
        insort(self.adj[u], v)
        insort(self.adj[v], u)
        self.edge_count += 1
        return True

    def remove_edge(self, u: int, v: int) -> bool:
        self._check(u, v)
        if u == v or not self.has_edge(u, v):
            return False
        self.adj[u].pop(bisect_left(self.adj[u], v))
        self.adj[v].pop(bisect_left(self.adj[v], u))
        self.edge_count -= 1
        return True

    def neighbors(self, u: int) -> list[int]:
        return self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Canonical ``(u, v)`` with ``u < v``, ascending."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs[bisect_left(nbrs, u + 1):]:
                yield (u, v)

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges())

    def copy(self) -> "SparseGraph":
        g = SparseGraph(self.n)
        g.adj = [list(nbrs) for nbrs in self.adj]
        g.edge_count = self.edge_count
        return g

    def without_vertices(self, removed: Iterable[int]) -> "SparseGraph":
        """Copy with every edge touching ``removed`` dropped (ids are kept)."""
        gone = set(removed)
        g = SparseGraph(self.n)
        for u, v in self.edges():
            if u not in gone and v not in gone:
                g.adj[u].append(v)
                g.adj[v].append(u)
                g.edge_count += 1
        for nbrs in g.adj:
            nbrs.sort()
        return g

    @property
    def words(self) -> int:
        # one header per vertex, one id per adjacency entry
        return self.n + 2 * self.edge_count

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"SparseGraph(n={self.n}, m={self.edge_count})"


def connected_components(g: SparseGraph, removed: Iterable[int] = ()) -> tuple[list[int], int]:
    """Label components of ``g`` minus ``removed``.

    Labels run ``0..c-1`` in order of each component's smallest vertex;
    removed vertices get label ``-1`` and are not counted.
    """
    labels = [-1] * g.n
    skip = [False] * g.n
    for r in removed:
        skip[r] = True
    count = 0
    for s in range(g.n):
        if skip[s] or labels[s] != -1:
            continue
        labels[s] = count
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if labels[w] == -1 and not skip[w]:
                    labels[w] = count
                    queue.append(w)
        count += 1
    return labels, count


@dataclass
class MemoryBudget:
    """Peak word usage of a builder against a word limit.

    A word holds one vertex id or counter. ``peak_words`` only grows.
    """

    word_limit: int
    peak_words: int = 0

    def record(self, words: int) -> None:
        if words > self.peak_words:
            self.peak_words = words

    @property
    def exceeded(self) -> bool:
        return self.peak_words > self.word_limit

    @staticmethod
    def semi_streaming_limit(n: int, k: int) -> int:
        return 4 * k * n + 8 * n
