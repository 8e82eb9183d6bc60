"""Brute-force reference implementations and seeded graph generators.

Everything here is deliberately slow and simple, and shares no algorithmic
code with the modules it checks: connectivity uses vertex bitmasks, local
connectivity uses its own dictionary-based split network with depth-first
augmentation, and scan-first search is simulated by explicit marking.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .analysis import SeparatorSet
from .graph import SparseGraph
from .stream_io import write_stream


def _masks(g: SparseGraph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges():
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _count_components(masks: list[int], alive: int) -> int:
    count = 0
    rest = alive
    while rest:
        low = rest & -rest
        reach = low
        frontier = low
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= masks[b.bit_length() - 1]
                f ^= b
            nxt &= alive & ~reach
            reach |= nxt
            frontier = nxt
        rest &= ~reach
        count += 1
    return count


def oracle_k_connected(g: SparseGraph, k: int) -> bool:
    """Remove every (k-1)-subset and check the rest stays connected."""
    n = g.n
    if n < k + 1:
        return False
    masks = _masks(g)
    full = (1 << n) - 1
    for removed in combinations(range(n), k - 1):
        alive = full
        for r in removed:
            alive &= ~(1 << r)
        if _count_components(masks, alive) != 1:
            return False
    return True


def oracle_local_connectivity(g: SparseGraph, u: int, v: int) -> int:
    """Exact number of internally disjoint u-v paths, uncapped."""
    if u == v:
        raise ValueError("endpoints must differ")
    big = g.n + 1
    residual: dict = {}

    def arc(a, b, c):
        residual.setdefault(a, {})
        residual.setdefault(b, {})
        residual[a][b] = residual[a].get(b, 0) + c
        residual[b].setdefault(a, 0)

    for w in range(g.n):
        arc(("in", w), ("out", w), big if w in (u, v) else 1)
    for a, b in g.edges():
        arc(("out", a), ("in", b), 1)
        arc(("out", b), ("in", a), 1)

    source, sink = ("out", u), ("in", v)

    def augment():
        stack = [(source, iter(list(residual[source])))]
        seen = {source}
        path = []
        while stack:
            node, it = stack[-1]
            step = next((w for w in it if w not in seen and residual[node][w] > 0), None)
            if step is None:
                stack.pop()
                if path:
                    path.pop()
                continue
            seen.add(step)
            path.append((node, step))
            if step == sink:
                return path
            stack.append((step, iter(list(residual[step]))))
        return None

    total = 0
    while (path := augment()) is not None:
        for a, b in path:
            residual[a][b] -= 1
            residual[b][a] += 1
        total += 1
    return total


def oracle_all_separators(g: SparseGraph, k: int) -> list[SeparatorSet]:
    n = g.n
    masks = _masks(g)
    full = (1 << n) - 1
    base = _count_components(masks, full)
    out = []
    for size in range(1, k):
        for subset in combinations(range(n), size):
            alive = full
            for r in subset:
                alive &= ~(1 << r)
            if _count_components(masks, alive) > base:
                out.append(SeparatorSet(subset))
    out.sort()
    return out


def oracle_sfs_forest(n: int, edges: Iterable, order: list[int]) -> set[tuple[int, int]]:
    """Scan-first search by explicit marking, scanning in ``order``.

    A vertex still unmarked when its turn comes starts a new tree.
    """
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for a, b in edges:
        if a != b:
            nbrs[a].add(b)
            nbrs[b].add(a)
    marked = [False] * n
    forest = set()
    for v in order:
        marked[v] = True
        for w in nbrs[v]:
            if not marked[w]:
                marked[w] = True
                forest.add((min(v, w), max(v, w)))
    return forest


# -- generators ---------------------------------------------------------------

MODELS = ("gnp", "cycle", "complete", "circulant", "two_blocks")


@dataclass(frozen=True)
class Corpus:
    """Seeded generator parameters for one graph."""

    model: str
    n: int
    seed: int
    p: float = 0.5
    offsets: tuple[int, ...] = ()
    separator_size: int = 1
    name: str = field(default="", compare=False)

    def build(self) -> tuple[SparseGraph, list[tuple[int, int]]]:
        return generate(self.model, self.params(), self.seed)

    def params(self) -> dict:
        return {"n": self.n, "p": self.p, "offsets": self.offsets, "separator_size": self.separator_size}

    def label(self) -> str:
        return self.name or f"{self.model}-n{self.n}-s{self.seed}"


def _edges_for(model: str, params: dict, rng: random.Random) -> tuple[int, list[tuple[int, int]]]:
    n = int(params.get("n", 0))
    if n < 0:
        raise ValueError("n must be non-negative")
    p = float(params.get("p", 0.5))
    if model == "gnp":
        if not 0.0 <= p <= 1.0:
            raise ValueError("p must lie in [0, 1]")
        return n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    if model == "cycle":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return n, [(i, (i + 1) % n) for i in range(n)]
    if model == "complete":
        return n, [(u, v) for u in range(n) for v in range(u + 1, n)]
    if model == "circulant":
        offsets = tuple(int(o) for o in params.get("offsets", ()))
        if not offsets or any(not 0 < o <= n // 2 for o in offsets):
            raise ValueError("offsets must lie in 1..n/2")
        edges = set()
        for i in range(n):
            for o in offsets:
                j = (i + o) % n
                edges.add((min(i, j), max(i, j)))
        return n, sorted(edges)
    if model == "two_blocks":
        s = int(params.get("separator_size", 1))
        if s < 1 or n - s < 2:
            raise ValueError("two_blocks needs 1 <= separator_size <= n - 2")
        left = (n - s) // 2
        block_a = range(0, left)
        sep = range(left, left + s)
        block_b = range(left + s, n)
        edges = []
        for block in (block_a, block_b, sep):
            for u, v in combinations(block, 2):
                if rng.random() < p:
                    edges.append((u, v))
        for w in sep:
            for x in list(block_a) + list(block_b):
                edges.append((min(w, x), max(w, x)))
        relabel = list(range(n))
        rng.shuffle(relabel)
        return n, [tuple(sorted((relabel[u], relabel[v]))) for u, v in edges]
    raise ValueError(f"unknown model {model!r}; expected one of {', '.join(MODELS)}")


def generate(
    model: str, params: dict, seed: int, path: Optional[str] = None
) -> tuple[SparseGraph, list[tuple[int, int]]]:
    """Build a graph and its stream order (shuffled, random orientation).

    Writes the stream file when ``path`` is given. Same seed, same bytes.
    """
    rng = random.Random(seed)
    n, edges = _edges_for(model, params, rng)
    g = SparseGraph.from_edges(n, edges)
    stream = list(g.edges())
    rng.shuffle(stream)
    stream = [(v, u) if rng.random() < 0.5 else (u, v) for u, v in stream]
    if path is not None:
        write_stream(path, n, stream, comment=f"model={model} seed={seed}")
    return g, stream


_CIRCULANTS = (
    (10, (1, 2)), (12, (1, 3)), (13, (1, 2, 3)), (15, (1, 4)), (16, (1, 2, 5)),
    (20, (1, 2)), (9, (1, 2, 3, 4)), (11, (2, 3)), (14, (1, 5)), (18, (1, 3, 7)),
)

_PROBS = (0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8)


def default_corpus() -> list[Corpus]:
    """The committed test corpus: 210 seeded graphs with 8 <= n <= 25."""
    out = []
    for i in range(170):
        out.append(Corpus("gnp", 8 + i % 18, seed=1000 + i, p=_PROBS[i % 7]))
    for i, n in enumerate(range(8, 13)):
        out.append(Corpus("cycle", n, seed=2000 + i))
    for i, n in enumerate(range(6, 11)):
        out.append(Corpus("complete", n, seed=3000 + i))
    for i, (n, offsets) in enumerate(_CIRCULANTS):
        out.append(Corpus("circulant", n, seed=4000 + i, offsets=offsets))
    for i in range(20):
        out.append(Corpus("two_blocks", 10 + i % 6, seed=5000 + i, p=(0.7, 0.9)[i % 2], separator_size=1 + i % 3))
    return out
