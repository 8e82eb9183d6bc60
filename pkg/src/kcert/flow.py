"""Local vertex connectivity up to a cap, and minimum vertex cuts.

Both operations run unit-capacity augmenting paths on the split network of a
:class:`~kcert.graph.SparseGraph`. Each augmentation is one breadth-first
search with neighbors scanned in ascending id, so ``cap`` augmentations cost
``O(cap * m)``.

The search loop lives in a compiled extension when it is importable and falls
back to an identical pure-Python version otherwise. Setting
``KCERT_PURE_PYTHON=1`` before import forces the fallback.
"""

from __future__ import annotations

import os
from typing import Optional

from . import _flow_py
from .graph import SparseGraph

try:
    if os.environ.get("KCERT_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from ._flow_ext import max_flow as _max_flow

    BACKEND = "compiled"
except ImportError:
    _max_flow = _flow_py.max_flow
    BACKEND = "python"

# words of per-call scratch, per vertex: prv (1) + parent (2) + queue (2)
SCRATCH_WORDS_PER_VERTEX = 5


class OpCounter:
    """Accumulates kernel operation counts (dequeued nodes + arcs scanned)."""

    __slots__ = ("ops", "calls")

    def __init__(self):
        self.ops = 0
        self.calls = 0

    def add(self, ops: int) -> None:
        self.ops += ops
        self.calls += 1


def _check_pair(g: SparseGraph, x: int, y: int, cap: int) -> None:
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise IndexError(f"vertex out of range: ({x}, {y}) with n={g.n}")
    if x == y:
        raise ValueError("endpoints must differ")
    if cap < 1:
        raise ValueError("cap must be at least 1")


def local_connectivity(
    g: SparseGraph, x: int, y: int, cap: int, counter: Optional[OpCounter] = None
) -> int:
    """``min(kappa(x, y), cap)``; an edge ``xy`` counts as one path."""
    _check_pair(g, x, y, cap)
    value, _, ops = _max_flow(g.adj, x, y, cap, False)
    if counter is not None:
        counter.add(ops)
    return value


def min_vertex_cut(
    g: SparseGraph, x: int, y: int, cap: int, counter: Optional[OpCounter] = None
) -> Optional[list[int]]:
    """Sorted minimum vertex set separating nonadjacent ``x`` and ``y``.

    Returns ``None`` when ``kappa(x, y) >= cap``.
    """
    _check_pair(g, x, y, cap)
    if g.has_edge(x, y):
        raise ValueError(f"{x} and {y} are adjacent; no vertex cut separates them")
    value, cut, ops = _max_flow(g.adj, x, y, cap, True)
    if counter is not None:
        counter.add(ops)
    if value >= cap:
        return None
    assert len(cut) == value
    return cut


def local_connectivity_to_set(
    g: SparseGraph, x: int, targets: list[int], cap: int, counter: Optional[OpCounter] = None
) -> int:
    """Paths from ``x`` to the set ``targets``, disjoint except at ``x``.

    Equivalent to flow into an auxiliary sink joined to every target; each
    target keeps vertex capacity one. ``x`` must not be a target.
    """
    aux_adj = augment_with_sink(g, targets)
    return connectivity_to_sink(aux_adj, x, cap, counter)


def augment_with_sink(g: SparseGraph, targets: list[int]) -> list[list[int]]:
    """Adjacency of ``g`` plus a sink vertex ``g.n`` joined to ``targets``.

    The sink has the largest id, so appending it keeps neighbor lists sorted.
    """
    marks = set(targets)
    adj = [nbrs + [g.n] if v in marks else nbrs for v, nbrs in enumerate(g.adj)]
    adj.append(sorted(marks))
    return adj


def connectivity_to_sink(
    aux_adj: list[list[int]], x: int, cap: int, counter: Optional[OpCounter] = None
) -> int:
    sink = len(aux_adj) - 1
    if not 0 <= x < sink:
        raise IndexError(f"vertex out of range: {x}")
    if x in aux_adj[sink]:
        raise ValueError("source must not be one of the targets")
    value, _, ops = _max_flow(aux_adj, x, sink, cap, False)
    if counter is not None:
        counter.add(ops)
    return value
