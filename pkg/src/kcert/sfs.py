"""Scan-first search over an edge stream in two passes.

Pass one grows a spanning forest with union-find. Between passes a depth-first
preorder of that forest fixes the scan order. Pass two keeps, for every vertex,
only the edge to its earliest preceding neighbor; the surviving edges are the
scan-first search forest for that order.

The forest under construction is stored implicitly: ``pred_pos[v]`` is the
position of ``v``'s single preceding neighbor in the forest, or ``-1``.
"""

from __future__ import annotations

import enum
from typing import NamedTuple, Optional

from .dsu import DisjointSets
from .graph import SparseGraph
from .stream_io import Edge


class Phase(enum.Enum):
    PASS1 = "pass1"
    INTERLUDE_DONE = "interlude_done"
    PASS2 = "pass2"
    FINISHED = "finished"


class PhaseError(RuntimeError):
    pass


class HandOffKind(enum.Enum):
    NONE = "none"
    PASS_THROUGH = "pass_through"
    EVICTED = "evicted"


class HandOff(NamedTuple):
    kind: HandOffKind
    edge: Optional[Edge] = None


NO_HANDOFF = HandOff(HandOffKind.NONE)


class ScanForest:
    """A finished scan-first search forest.

    Keeps only the vertex positions and each vertex's preceding-neighbor
    position, which is enough for O(1) membership. The order itself and the
    edge list are rebuilt on demand.
    """

    __slots__ = ("position", "pred_pos", "edge_count")

    def __init__(self, position: list[int], pred_pos: list[int]):
        self.position = position
        self.pred_pos = pred_pos
        self.edge_count = sum(1 for p in pred_pos if p != -1)

    @property
    def n(self) -> int:
        return len(self.position)

    @property
    def order(self) -> list[int]:
        order = [0] * len(self.position)
        for v, p in enumerate(self.position):
            order[p] = v
        return order

    def contains(self, u: int, v: int) -> bool:
        pu = self.position[u]
        pv = self.position[v]
        if pu < pv:
            return self.pred_pos[v] == pu
        if pv < pu:
            return self.pred_pos[u] == pv
        return False

    def edges(self) -> list[tuple[int, int]]:
        order = self.order
        out = []
        for v, p in enumerate(self.pred_pos):
            if p != -1:
                u = order[p]
                out.append((u, v) if u < v else (v, u))
        out.sort()
        return out

    def graph(self) -> SparseGraph:
        return SparseGraph.from_edges(self.n, self.edges())

    @property
    def words(self) -> int:
        return 2 * len(self.position)


class SfsState:
    """One two-pass scan-first search instance on ``n`` vertices."""

    def __init__(self, n: int):
        self.n = n
        self.phase = Phase.PASS1
        self.z: Optional[SparseGraph] = SparseGraph(n)
        self.dsu: Optional[DisjointSets] = DisjointSets(n)
        self.order: list[int] = []
        self.position: list[int] = []
        self.pred_pos: list[int] = []
        self.components = n
        self.pass1_fed = 0
        self.pass2_fed = 0
        self.forest_edges = 0
        self.duplicates = 0
        self.dsu_ops = 0

    def _expect(self, *phases: Phase) -> None:
        if self.phase not in phases:
            raise PhaseError(f"operation not allowed in phase {self.phase.value}")

    def pass1_feed(self, u: int, v: int) -> bool:
        self._expect(Phase.PASS1)
        if u == v:
            raise ValueError("self-loops must be filtered by the caller")
        self.pass1_fed += 1
        if self.dsu.union(u, v):
            self.z.add_edge(u, v)
            return True
        return False

    def interlude(self, on_peak=None) -> None:
        """Depth-first preorder of the pass-one forest.

        Roots are taken in ascending id and neighbors visited in ascending id.
        ``on_peak`` receives the word count at the moment of peak usage.
        """
        self._expect(Phase.PASS1)
        n = self.n
        z = self.z
        order: list[int] = []
        position = [-1] * n
        max_stack = 0
        for r in range(n):
            if position[r] != -1:
                continue
            position[r] = len(order)
            order.append(r)
            stack = [[r, 0]]
            while stack:
                top = stack[-1]
                nbrs = z.adj[top[0]]
                i = top[1]
                while i < len(nbrs) and position[nbrs[i]] != -1:
                    i += 1
                if i == len(nbrs):
                    stack.pop()
                    continue
                w = nbrs[i]
                top[1] = i + 1
                position[w] = len(order)
                order.append(w)
                stack.append([w, 0])
                if len(stack) > max_stack:
                    max_stack = len(stack)
        if on_peak is not None:
            on_peak(self.dsu.words + z.words + 3 * n + max_stack)
        self.order = order
        self.position = position
        self.pred_pos = [-1] * n
        self.components = self.dsu.set_count
        self.dsu_ops = self.dsu.ops
        # the spanning forest and union-find are not needed past this point
        self.z = None
        self.dsu = None
        self.phase = Phase.INTERLUDE_DONE

    def pass2_feed(self, u: int, v: int) -> HandOff:
        if self.phase is Phase.INTERLUDE_DONE:
            self.phase = Phase.PASS2
        self._expect(Phase.PASS2)
        if u == v:
            raise ValueError("self-loops must be filtered by the caller")
        self.pass2_fed += 1
        position = self.position
        pu = position[u]
        pv = position[v]
        if pv < pu:
            u, v, pu, pv = v, u, pv, pu
        pred_pos = self.pred_pos
        current = pred_pos[v]
        if current == -1:
            pred_pos[v] = pu
            self.forest_edges += 1
            return NO_HANDOFF
        if pu < current:
            pred_pos[v] = pu
            return HandOff(HandOffKind.EVICTED, Edge(self.order[current], v))
        if pu == current:
            # repeated forest edge
            self.duplicates += 1
            return NO_HANDOFF
        return HandOff(HandOffKind.PASS_THROUGH, Edge(u, v))

    def finish(self) -> ScanForest:
        self._expect(Phase.INTERLUDE_DONE, Phase.PASS2)
        self.phase = Phase.FINISHED
        forest = ScanForest(self.position, self.pred_pos)
        self.order = []
        return forest

    @property
    def words(self) -> int:
        if self.phase is Phase.PASS1:
            return self.dsu.words + self.z.words
        if self.phase is Phase.FINISHED:
            return 0
        return 3 * self.n


def run_sfs(stream, n: Optional[int] = None) -> ScanForest:
    """Standalone scan-first search of a stream: exactly two passes."""
    state = SfsState(stream.n if n is None else n)
    for e in stream.edges():
        if e.u != e.v:
            state.pass1_feed(e.u, e.v)
    state.interlude()
    stream.rewind()
    for e in stream.edges():
        if e.u != e.v:
            state.pass2_feed(e.u, e.v)
    return state.finish()
