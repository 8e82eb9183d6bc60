"""One-pass certificate: keep an edge unless its endpoints are already
k-connected inside the certificate."""

from __future__ import annotations

from .flow import SCRATCH_WORDS_PER_VERTEX, OpCounter, local_connectivity
from .graph import MemoryBudget, SparseGraph


class A1State:
    def __init__(self, n: int, k: int):
        if k < 1:
            raise ValueError("k must be at least 1")
        self.n = n
        self.k = k
        self.cert = SparseGraph(n)
        self.edges_seen = 0
        self.edges_kept = 0
        self.self_loops = 0
        self.duplicates = 0
        self.flow_ops = OpCounter()
        self.budget = MemoryBudget(MemoryBudget.semi_streaming_limit(n, k))
        self.budget.record(self.cert.words)

    def feed(self, u: int, v: int) -> bool:
        """Offer one stream edge; True iff it was added to the certificate."""
        cert = self.cert
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError(f"vertex out of range: ({u}, {v}) with n={self.n}")
        self.edges_seen += 1
        if u == v:
            self.self_loops += 1
            return False
        if cert.has_edge(u, v):
            self.duplicates += 1
            return False
        self.budget.record(cert.words + SCRATCH_WORDS_PER_VERTEX * self.n)
        if local_connectivity(cert, u, v, self.k, self.flow_ops) >= self.k:
            return False
        cert.add_edge(u, v)
        self.edges_kept += 1
        self.budget.record(cert.words)
        return True


def a1_feed(state: A1State, u: int, v: int) -> bool:
    return state.feed(u, v)


def a1_run(stream, k: int, state: A1State | None = None) -> SparseGraph:
    """Feed one full pass of ``stream`` and return the certificate.

    Pass an ``A1State`` to keep the counters; the stream must be at pass 0.
    """
    if stream.pass_index != 0 or stream.edges_read_this_pass != 0:
        raise ValueError("a1_run needs a fresh stream")
    if state is None:
        state = A1State(stream.n, k)
    for e in stream.edges():
        state.feed(e.u, e.v)
    # one pass consumed; position the stream past it
    stream.rewind()
    return state.cert
