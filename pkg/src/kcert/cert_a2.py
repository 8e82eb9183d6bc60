"""Certificate from k nested scan-first searches over k+1 passes.

Instance ``i`` (1-based) runs its first pass during stream pass ``i`` and its
second during pass ``i + 1``. During its second pass it only sees raw edges
outside the already finished forests ``F_1..F_{i-1}``; every edge it does not
keep (passed through, or evicted later) is handed to instance ``i + 1`` as
that instance's first-pass input. The union ``F_1 + ... + F_k`` is returned.
"""

from __future__ import annotations

from typing import Optional

from .graph import MemoryBudget, SparseGraph, connected_components
from .sfs import HandOffKind, ScanForest, SfsState
from .stream_io import Edge


class ProtocolError(RuntimeError):
    pass


class A2State:
    def __init__(self, n: int, k: int):
        if k < 1:
            raise ValueError("k must be at least 1")
        self.n = n
        self.k = k
        # instances[i] is X_i; slot 0 unused so indices match pass numbers
        self.instances: list[Optional[SfsState]] = [None] * (k + 1)
        self.finalized: list[ScanForest] = []
        self.current_pass = 0
        self.done = False
        self.m_stream = 0
        self.self_loops = 0
        self.membership_checks = 0
        self.skipped = [0] * (k + 2)
        self.handed = [0] * (k + 2)
        self.discarded = 0
        self.duplicates_seen = 0
        self.budget = MemoryBudget(MemoryBudget.semi_streaming_limit(n, k))
        self._fixed_words = 0
        self._retired_ops = 0
        self.components_of_g = n
        self._pass1: Optional[SfsState] = None
        self._pass2: Optional[SfsState] = None

    # -- protocol -------------------------------------------------------

    def begin_pass(self, p: int) -> None:
        if self.done or p != self.current_pass + 1 or p > self.k + 1:
            raise ProtocolError(f"pass {p} cannot follow pass {self.current_pass}")
        if p >= 3:
            self._finalize(p - 2)
        if p >= 2:
            inst = self.instances[p - 1]
            fixed = sum(f.words for f in self.finalized)
            inst.interlude(on_peak=lambda w: self.budget.record(fixed + w))
            if p == 2:
                self.components_of_g = inst.components
        self._pass2 = self.instances[p - 1] if p >= 2 else None
        if p <= self.k:
            self.instances[p] = SfsState(self.n)
            self._pass1 = self.instances[p]
        else:
            self._pass1 = None
        self.current_pass = p
        self._fixed_words = sum(f.words for f in self.finalized)
        if self._pass2 is not None:
            self._fixed_words += self._pass2.words
        self._record()

    def finish(self) -> list[ScanForest]:
        if self.done or self.current_pass != self.k + 1:
            raise ProtocolError("finish must follow pass k+1")
        self._finalize(self.k)
        self._pass2 = None
        self.done = True
        return self.finalized

    def _finalize(self, i: int) -> None:
        inst = self.instances[i]
        forest = inst.finish()
        # every edge the instance saw in its second pass is either kept or handed on once
        handed = self.handed[i + 1] if i < self.k else self.discarded
        expected = inst.pass2_fed - forest.edge_count - inst.duplicates
        if handed != expected:
            raise ProtocolError(
                f"hand-over conservation violated after X_{i}: handed {handed}, expected {expected}"
            )
        if i < self.k and self.instances[i + 1].pass1_fed != handed:
            raise ProtocolError(f"X_{i + 1} received {self.instances[i + 1].pass1_fed} edges, {handed} handed")
        self.finalized.append(forest)
        self._retired_ops += inst.dsu_ops + inst.pass2_fed
        self.duplicates_seen += inst.duplicates
        self.instances[i] = None

    def _record(self) -> None:
        words = self._fixed_words
        if self._pass1 is not None:
            words += self._pass1.words
        self.budget.record(words)

    # -- per-edge work --------------------------------------------------

    def membership(self, u: int, v: int, j: int) -> bool:
        """Is ``uv`` in the finalized forest ``F_j`` (1-based)? O(1)."""
        if not 1 <= j <= len(self.finalized):
            raise IndexError(f"forest F_{j} is not finalized")
        return self.finalized[j - 1].contains(u, v)

    def feed(self, u: int, v: int) -> None:
        p = self.current_pass
        if p == 0 or self.done:
            raise ProtocolError("feed outside a pass")
        if p == 1:
            self.m_stream += 1
        if u == v:
            if p == 1:
                self.self_loops += 1
            return
        if p == 1:
            if self._pass1.pass1_feed(u, v):
                self._record()
            return
        for forest in self.finalized:
            self.membership_checks += 1
            if forest.contains(u, v):
                self.skipped[p] += 1
                return
        out = self._pass2.pass2_feed(u, v)
        if out.kind is HandOffKind.NONE:
            return
        if self._pass1 is None:
            self.discarded += 1
            return
        self.handed[p] += 1
        e = out.edge
        if self._pass1.pass1_feed(e.u, e.v):
            self._record()

    # -- results --------------------------------------------------------

    def certificate(self) -> SparseGraph:
        if not self.done:
            raise ProtocolError("certificate requested before finish")
        cert = SparseGraph(self.n)
        for forest in self.finalized:
            for u, v in forest.edges():
                if not cert.add_edge(u, v):
                    raise ProtocolError(f"forests overlap on edge ({u}, {v})")
        self.budget.record(sum(f.words for f in self.finalized) + cert.words)
        return cert

    @property
    def per_forest_edges(self) -> list[int]:
        return [f.edge_count for f in self.finalized]

    @property
    def edge_ops(self) -> int:
        """Membership checks + union-find work + second-pass feeds."""
        total = self.membership_checks + self._retired_ops
        for inst in self.instances:
            if inst is not None:
                total += (inst.dsu.ops if inst.dsu is not None else inst.dsu_ops) + inst.pass2_fed
        return total


def forest_membership(state: A2State, e: Edge, j: int) -> bool:
    return state.membership(e.u, e.v, j)


def a2_feed(state: A2State, e: Edge) -> None:
    state.feed(e.u, e.v)


def a2_begin_pass(state: A2State, p: int) -> None:
    state.begin_pass(p)


def a2_run(stream, k: int, state: A2State | None = None) -> SparseGraph:
    """Drive ``k + 1`` passes over ``stream`` and return ``F_1 + ... + F_k``."""
    if stream.pass_index != 0 or stream.edges_read_this_pass != 0:
        raise ValueError("a2_run needs a fresh stream")
    if state is None:
        state = A2State(stream.n, k)
    for p in range(1, k + 2):
        state.begin_pass(p)
        for e in stream.edges():
            state.feed(e.u, e.v)
        stream.rewind()
    state.finish()
    cert = state.certificate()
    _, comps = connected_components(cert)
    if comps != state.components_of_g:
        raise ProtocolError(f"certificate has {comps} components, stream graph has {state.components_of_g}")
    return cert
