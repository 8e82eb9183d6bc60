"""Decisions and separators computed from a certificate alone."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .flow import augment_with_sink, connectivity_to_sink, local_connectivity, min_vertex_cut
from .graph import SparseGraph, connected_components


@dataclass(frozen=True, order=True)
class SeparatorSet:
    """Vertex set whose removal leaves more components than before."""

    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def verify(self, g: SparseGraph) -> bool:
        _, before = connected_components(g)
        _, after = connected_components(g, self.vertices)
        return after > before


def is_k_connected(g: SparseGraph, k: int) -> bool:
    """Decide k-vertex-connectivity with ``O(n)`` capped flow computations.

    Pins ``W`` = the ``k`` smallest ids. Any separator ``S`` with
    ``|S| < k`` misses some vertex of ``W``; either two vertices of ``W`` end
    up on different sides, or some vertex outside ``W`` is cut off from all
    of ``W \\ S``. The first case is caught by the pairwise checks inside
    ``W``, the second by flow from each outside vertex to a sink joined to
    ``W``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = g.n
    if n < k + 1:
        return False
    if min(g.degree(v) for v in range(n)) < k:
        return False
    pinned = list(range(k))
    for x, y in combinations(pinned, 2):
        if local_connectivity(g, x, y, k) < k:
            return False
    aux = augment_with_sink(g, pinned)
    for v in range(k, n):
        if connectivity_to_sink(aux, v, k) < k:
            return False
    return True


def extract_separator(g: SparseGraph, u: int, v: int, k: int) -> Optional[SeparatorSet]:
    """Minimum separator of ``u`` and ``v`` if ``kappa(u, v) < k``.

    Pairs in different components have an empty minimum cut, which is not a
    separator; they yield ``None`` like pairs with ``kappa >= k``.
    """
    cut = min_vertex_cut(g, u, v, k)
    if not cut:
        return None
    return SeparatorSet(tuple(cut))


def all_separators(g: SparseGraph, k: int) -> list[SeparatorSet]:
    """Every vertex set of size ``1..k-1`` whose removal adds components.

    Exhaustive over subsets, so exponential in ``k`` only. Sets are not
    required to be minimal. Sorted lexicographically by vertex tuple.
    """
    _, base = connected_components(g)
    found = []
    for size in range(1, k):
        for subset in combinations(range(g.n), size):
            _, count = connected_components(g, subset)
            if count > base:
                found.append(SeparatorSet(subset))
    found.sort()
    return found


def cut_vertices(g: SparseGraph) -> list[int]:
    return [s.vertices[0] for s in all_separators(g, 2)]
